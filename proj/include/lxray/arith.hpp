#pragma once

#include <cstdint>
#include <numeric>

#include "lxray/errors.hpp"

namespace lxray {

// All coordinates, widths and counts are 64-bit signed integers. Every
// arithmetic step that could wrap goes through these helpers and raises
// OverflowError instead of wrapping silently. There is no floating point
// anywhere in the library.
using Int = std::int64_t;

inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
    return r;
}

inline Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
    return r;
}

inline Int checked_neg(Int a) {
    return checked_sub(0, a);
}

inline Int checked_abs(Int a) {
    return a < 0 ? checked_neg(a) : a;
}

// Floor division, rounding toward negative infinity. b must be nonzero.
inline Int floor_div(Int a, Int b) {
    if (b == -1) return checked_neg(a);  // a / -1 overflows for INT64_MIN
    Int q = a / b;
    Int r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

// Ceiling division, rounding toward positive infinity. b must be nonzero.
inline Int ceil_div(Int a, Int b) {
    if (b == -1) return checked_neg(a);
    Int q = a / b;
    Int r = a % b;
    if (r != 0 && ((r < 0) == (b < 0))) ++q;
    return q;
}

inline Int gcd_abs(Int a, Int b) {
    return std::gcd(checked_abs(a), checked_abs(b));
}

}  // namespace lxray
