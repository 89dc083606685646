#pragma once

#include <cstdint>

#include "emsimplex/errors.hpp"

namespace emsimplex {

/// All counts, masses, multiplicities and volumes in this library.
/// Arithmetic on them goes through the checked_* helpers: overflow is an
/// error, never a silent wrap.
using Count = std::int64_t;

inline Count checked_add(Count a, Count b) {
  Count result;
  if (__builtin_add_overflow(a, b, &result)) {
    throw OverflowError("integer overflow in addition");
  }
  return result;
}

inline Count checked_sub(Count a, Count b) {
  Count result;
  if (__builtin_sub_overflow(a, b, &result)) {
    throw OverflowError("integer overflow in subtraction");
  }
  return result;
}

inline Count checked_mul(Count a, Count b) {
  Count result;
  if (__builtin_mul_overflow(a, b, &result)) {
    throw OverflowError("integer overflow in multiplication");
  }
  return result;
}

}  // namespace emsimplex
