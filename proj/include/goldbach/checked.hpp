// checked.hpp
// Overflow-checked integer arithmetic. Progression terms and pair sums are
// computed through these helpers so overflow raises instead of wrapping.

#pragma once
#include <cstdint>
#include <stdexcept>

namespace goldbach {

inline uint64_t checked_add(uint64_t a, uint64_t b) {
    uint64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("unsigned addition overflow");
    return r;
}

inline uint64_t checked_mul(uint64_t a, uint64_t b) {
    uint64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("unsigned multiplication overflow");
    return r;
}

inline int64_t checked_sub(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_sub_overflow(a, b, &r))
        throw std::overflow_error("signed subtraction overflow");
    return r;
}

} // namespace goldbach
