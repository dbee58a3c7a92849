#pragma once

#include <cstdint>

#include "elq/error.hpp"

namespace elq::checked {

inline std::int64_t add(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_add_overflow(a, b, &out)) throw InternalError("integer overflow in addition");
    return out;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_sub_overflow(a, b, &out)) throw InternalError("integer overflow in subtraction");
    return out;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_mul_overflow(a, b, &out)) throw InternalError("integer overflow in multiplication");
    return out;
}

/// Ceiling of num/den for den > 0.
inline std::int64_t ceil_div(std::int64_t num, std::int64_t den) {
    std::int64_t q = num / den;
    if (num % den != 0 && num > 0) ++q;
    return q;
}

}  // namespace elq::checked
