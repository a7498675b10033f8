#include "tanglelink/fraction.hpp"

#include <ostream>

namespace tanglelink {

Fraction Fraction::make(Int p, Int q) {
  if (q == 0)
    throw Error(ErrorCode::InfiniteTangle, "denominator is zero (the infinity tangle is unsupported)");
  if (q < 0) {
    p = checked::neg(p);
    q = checked::neg(q);
  }
  const Int g = checked::gcd(p, q);
  return Fraction(p / g, q / g);
}

Fraction Fraction::reduced(Int p, Int q) {
  if (q <= 0)
    throw Error(ErrorCode::InvalidSpec, "denominator must be positive, got " + std::to_string(q));
  if (checked::gcd(p, q) != 1)
    throw Error(ErrorCode::InvalidSpec,
                std::to_string(p) + "/" + std::to_string(q) + " is not in lowest terms");
  return Fraction(p, q);
}

Fraction Fraction::reciprocal() const {
  if (p_ == 0)
    throw Error(ErrorCode::DivisionByZero, "reciprocal of zero");
  return make(q_, p_);
}

Fraction operator+(const Fraction& a, const Fraction& b) {
  const Int num = checked::add(checked::mul(a.p_, b.q_), checked::mul(b.p_, a.q_));
  return Fraction::make(num, checked::mul(a.q_, b.q_));
}

std::strong_ordering operator<=>(const Fraction& a, const Fraction& b) {
  return checked::mul(a.p_, b.q_) <=> checked::mul(b.p_, a.q_);
}

std::string Fraction::str() const { return std::to_string(p_) + "/" + std::to_string(q_); }

std::ostream& operator<<(std::ostream& os, const Fraction& f) { return os << f.str(); }

} // namespace tanglelink
