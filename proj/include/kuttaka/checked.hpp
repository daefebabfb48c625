#pragma once

#include <cstdint>

#include "kuttaka/errors.hpp"

namespace kuttaka {

using i64 = std::int64_t;

// Cap on every public input magnitude. Intermediates are overflow-checked
// and may exceed it up to the int64 range before an OverflowError fires.
inline constexpr i64 kMagnitudeBound = 1'000'000'000'000'000'000LL;  // 10^18

inline i64 checked_add(i64 a, i64 b) {
    i64 out;
    if (__builtin_add_overflow(a, b, &out)) throw OverflowError("integer overflow in addition");
    return out;
}

inline i64 checked_sub(i64 a, i64 b) {
    i64 out;
    if (__builtin_sub_overflow(a, b, &out)) throw OverflowError("integer overflow in subtraction");
    return out;
}

inline i64 checked_mul(i64 a, i64 b) {
    i64 out;
    if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("integer overflow in multiplication");
    return out;
}

inline i64 checked_neg(i64 a) { return checked_sub(0, a); }

// Narrows a double-width intermediate back to i64.
inline i64 narrow_i64(__int128 v) {
    if (v > static_cast<__int128>(INT64_MAX) || v < static_cast<__int128>(INT64_MIN))
        throw OverflowError("intermediate value exceeds 64-bit range");
    return static_cast<i64>(v);
}

// Least nonnegative representative of a modulo m (m >= 1).
inline i64 mod_nonneg(i64 a, i64 m) {
    i64 r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace kuttaka
