#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>

namespace vulnkit {

using Weight = std::int64_t;

inline Weight checked_add(Weight a, Weight b) {
    Weight r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("weight arithmetic overflow");
    return r;
}

inline Weight checked_sub(Weight a, Weight b) {
    Weight r;
    if (__builtin_sub_overflow(a, b, &r))
        throw std::overflow_error("weight arithmetic overflow");
    return r;
}

inline Weight checked_mul(Weight a, Weight b) {
    Weight r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("weight arithmetic overflow");
    return r;
}

/// n choose 2, checked.
inline Weight pairs(Weight n) {
    if (n < 2)
        return 0;
    return checked_mul(n, n - 1) / 2;
}

} // namespace vulnkit
