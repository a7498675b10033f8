#include "tanglelink/tangle.hpp"

#include <algorithm>

namespace tanglelink {

const char* to_string(TangleClass c) noexcept {
  switch (c) {
  case TangleClass::V: return "V";
  case TangleClass::D: return "D";
  case TangleClass::H: return "H";
  }
  return "?";
}

Fraction fraction_from_conway(const ConwaySequence& seq) {
  if (seq.terms.empty())
    throw Error(ErrorCode::EmptySequence, "Conway sequence is empty");

  // x is the value of the prefix a_1..a_i.
  Fraction x = Fraction::integer(seq.terms.front());
  for (std::size_t i = 1; i < seq.terms.size(); ++i) {
    if (x.p() == 0)
      throw Error(ErrorCode::DivisionByZero,
                  "continued fraction divides by zero after term " + std::to_string(i));
    x = Fraction::integer(seq.terms[i]) + x.reciprocal();
  }
  return x;
}

ConwaySequence conway_from_fraction(const Fraction& f) {
  ConwaySequence seq;
  Int p = f.p();
  Int q = f.q();
  for (;;) {
    const Int a = checked::floor_div(p, q);
    seq.terms.push_back(a);
    const Int r = checked::sub(p, checked::mul(a, q));
    if (r == 0)
      break;
    p = q;
    q = r;
  }
  std::reverse(seq.terms.begin(), seq.terms.end());
  return seq;
}

TangleClass classify(const Fraction& f) noexcept {
  const bool p_odd = (f.p() % 2) != 0;
  const bool q_odd = (f.q() % 2) != 0;
  if (!p_odd)
    return TangleClass::H;
  return q_odd ? TangleClass::D : TangleClass::V;
}

bool tangles_equivalent(const ConwaySequence& a, const ConwaySequence& b) {
  return fraction_from_conway(a) == fraction_from_conway(b);
}

Int crossing_count(const ConwaySequence& seq) {
  Int total = 0;
  for (Int a : seq.terms)
    total = checked::add(total, checked::abs(a));
  return total;
}

} // namespace tanglelink
