#pragma once

#include <concepts>
#include <limits>

#include "greenseq/errors.hpp"

namespace greenseq {

/// Signed exact integer scalar: a built-in signed integer (arithmetic is
/// overflow-checked) or an unbounded integer type such as BigInt.
template <typename T>
concept ExactInteger = std::numeric_limits<T>::is_specialized && std::numeric_limits<T>::is_integer &&
                       std::numeric_limits<T>::is_signed;

template <ExactInteger Scalar>
constexpr Scalar checked_add(const Scalar& a, const Scalar& b) {
  if constexpr (std::numeric_limits<Scalar>::is_bounded) {
    Scalar out{};
    if (__builtin_add_overflow(a, b, &out)) throw OverflowError("integer overflow in addition");
    return out;
  } else {
    return a + b;
  }
}

template <ExactInteger Scalar>
constexpr Scalar checked_sub(const Scalar& a, const Scalar& b) {
  if constexpr (std::numeric_limits<Scalar>::is_bounded) {
    Scalar out{};
    if (__builtin_sub_overflow(a, b, &out)) throw OverflowError("integer overflow in subtraction");
    return out;
  } else {
    return a - b;
  }
}

template <ExactInteger Scalar>
constexpr Scalar checked_mul(const Scalar& a, const Scalar& b) {
  if constexpr (std::numeric_limits<Scalar>::is_bounded) {
    Scalar out{};
    if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("integer overflow in multiplication");
    return out;
  } else {
    return a * b;
  }
}

template <ExactInteger Scalar>
constexpr Scalar checked_neg(const Scalar& a) {
  return checked_sub(Scalar{0}, a);
}

template <ExactInteger Scalar>
constexpr Scalar positive_part(const Scalar& a) {
  return a > 0 ? a : Scalar{0};
}

}  // namespace greenseq
