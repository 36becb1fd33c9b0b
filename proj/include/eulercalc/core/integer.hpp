#pragma once

#include <cstdint>

#include "eulercalc/core/error.hpp"

namespace eulercalc {

/// Exact integer used for all function values and Euler characteristics.
/// Arithmetic goes through the checked helpers below; overflow throws.
using Integer = std::int64_t;

inline Integer checked_add(Integer a, Integer b) {
    Integer r;
    if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("integer overflow in addition");
    return r;
}

inline Integer checked_sub(Integer a, Integer b) {
    Integer r;
    if (__builtin_sub_overflow(a, b, &r)) throw ArithmeticOverflow("integer overflow in subtraction");
    return r;
}

inline Integer checked_mul(Integer a, Integer b) {
    Integer r;
    if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow("integer overflow in multiplication");
    return r;
}

/// (-1)^n
constexpr Integer sign_of_dim(int n) { return (n % 2 == 0) ? 1 : -1; }

}  // namespace eulercalc
