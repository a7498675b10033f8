#pragma once

#include <cstdint>
#include <numeric>

#include "tanglelink/error.hpp"

namespace tanglelink {

using Int = std::int64_t;

namespace checked {

inline Int add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r))
    throw Error(ErrorCode::Overflow, "integer overflow in addition");
  return r;
}

inline Int sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r))
    throw Error(ErrorCode::Overflow, "integer overflow in subtraction");
  return r;
}

inline Int mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r))
    throw Error(ErrorCode::Overflow, "integer overflow in multiplication");
  return r;
}

inline Int neg(Int a) { return sub(0, a); }

inline Int abs(Int a) { return a < 0 ? neg(a) : a; }

// Floor of a/b, rounding toward negative infinity. b != 0.
inline Int floor_div(Int a, Int b) {
  if (b == -1)
    return neg(a);
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0)))
    --q;
  return q;
}

// Non-negative remainder companion of floor_div when b > 0.
inline Int floor_mod(Int a, Int b) { return sub(a, mul(floor_div(a, b), b)); }

inline Int gcd(Int a, Int b) { return std::gcd(abs(a), abs(b)); }

} // namespace checked
} // namespace tanglelink
