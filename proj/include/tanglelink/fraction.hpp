#pragma once

#include <compare>
#include <iosfwd>
#include <string>

#include "tanglelink/checked.hpp"

namespace tanglelink {

/// Reduced slope p/q of a rational tangle or rational link.
///
/// Always stored with gcd(|p|, q) = 1 and q > 0; zero is 0/1. A zero
/// denominator (the infinity tangle) is rejected.
class Fraction {
public:
  constexpr Fraction() = default;

  /// Normalizes sign and common factors. Throws InfiniteTangle when q == 0.
  static Fraction make(Int p, Int q);

  /// Accepts only an already reduced pair with q > 0; throws InvalidSpec otherwise.
  static Fraction reduced(Int p, Int q);

  static Fraction integer(Int n) { return Fraction(n, 1); }

  constexpr Int p() const noexcept { return p_; }
  constexpr Int q() const noexcept { return q_; }

  Fraction operator-() const { return Fraction(checked::neg(p_), q_); }
  Fraction reciprocal() const;

  friend Fraction operator+(const Fraction& a, const Fraction& b);

  friend constexpr bool operator==(const Fraction&, const Fraction&) = default;
  friend std::strong_ordering operator<=>(const Fraction& a, const Fraction& b);

  std::string str() const;

private:
  constexpr Fraction(Int p, Int q) noexcept : p_(p), q_(q) {}

  Int p_ = 0;
  Int q_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Fraction& f);

} // namespace tanglelink
