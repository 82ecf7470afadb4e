#pragma once

#include <cstdint>
#include <numeric>
#include <span>
#include <string>

#include "numsg/error.hpp"

namespace numsg {

using Int = std::int64_t;

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r))
    throw Error(ErrorCode::Overflow,
                "integer overflow in " + std::to_string(a) + " + " + std::to_string(b));
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r))
    throw Error(ErrorCode::Overflow,
                "integer overflow in " + std::to_string(a) + " - " + std::to_string(b));
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r))
    throw Error(ErrorCode::Overflow,
                "integer overflow in " + std::to_string(a) + " * " + std::to_string(b));
  return r;
}

// ceil(a / b) for a >= 0, b > 0
inline Int ceil_div(Int a, Int b) { return a / b + (a % b != 0 ? 1 : 0); }

inline Int gcd_of(std::span<const Int> values) {
  Int g = 0;
  for (Int v : values) g = std::gcd(g, v);
  return g;
}

}  // namespace numsg
