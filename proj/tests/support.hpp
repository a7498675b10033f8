#pragma once

// Reference computations kept independent of the library code paths, plus a
// small seeded generator for property tests.

#include <cstdint>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "tanglelink/fraction.hpp"

namespace testsupport {

using tanglelink::Fraction;
using tanglelink::Int;
__extension__ using Wide = __int128;

// Floor division on 128-bit values by way of the remainder.
inline Wide floor_div128(Wide a, Wide b) {
  Wide q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0)))
    --q;
  return q;
}

// Sum over k = 1..|p|/2 of (-1)^floor((2k-1) q / p).
inline Int ref_tuler(Int p, Int q) {
  Int sum = 0;
  const Int half = (p < 0 ? -p : p) / 2;
  for (Int k = 1; k <= half; ++k) {
    const Wide f = floor_div128(static_cast<Wide>(2 * k - 1) * q, p);
    sum += (f % 2 == 0) ? 1 : -1;
  }
  return sum;
}

// a_n + 1/(a_{n-1} + ... + 1/a_1) as a reduced (p, q) with q > 0; q == 0
// signals a zero denominator somewhere.
inline std::pair<Int, Int> ref_continued_fraction(const std::vector<Int>& terms) {
  Wide num = terms.front();
  Wide den = 1;
  for (std::size_t i = 1; i < terms.size(); ++i) {
    if (num == 0)
      return {1, 0};
    // a_i + 1/(num/den) = (a_i num + den) / num
    const Wide next_num = terms[i] * num + den;
    den = num;
    num = next_num;
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const auto g = std::gcd(static_cast<Int>(num < 0 ? -num : num), static_cast<Int>(den));
  return {static_cast<Int>(num / g), static_cast<Int>(den / g)};
}

struct Gen {
  std::mt19937_64 rng;
  explicit Gen(std::uint64_t seed) : rng(seed) {}

  Int range(Int lo, Int hi) { return std::uniform_int_distribution<Int>(lo, hi)(rng); }

  Fraction slope(Int max_p, Int max_q) {
    for (;;) {
      const Int p = range(-max_p, max_p);
      const Int q = range(1, max_q);
      if (std::gcd(p, q) == 1)
        return Fraction::reduced(p, q);
    }
  }

  Fraction even_slope(Int max_p, Int max_q) {
    for (;;) {
      const Int p = 2 * range(-max_p / 2, max_p / 2);
      const Int q = range(1, max_q);
      if (std::gcd(p, q) == 1)
        return Fraction::reduced(p, q);
    }
  }
};

} // namespace testsupport
