#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace cliquepoly {

// Exact counts and polynomial coefficients. 128 bits so binomial-weighted
// sums of clique counts on 64-vertex graphs stay representable.
using Count = unsigned __int128;
using Int = __int128;

class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

// Raised when an operation's precondition on its arguments does not hold.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

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

inline Count checked_add(Count a, Count b) {
    Count r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("count overflow in addition");
    return r;
}

inline Count checked_mul(Count a, Count b) {
    Count r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("count overflow in multiplication");
    return r;
}

inline Int to_signed(Count c) {
    if (c > static_cast<Count>(std::numeric_limits<Int>::max()))
        throw OverflowError("count does not fit a signed coefficient");
    return static_cast<Int>(c);
}

// C(n, k) with checked arithmetic; zero when k > n.
inline Int binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r = checked_mul(r, static_cast<Int>(n - k + i));
        r /= i;
    }
    return r;
}

inline std::string to_string(Count v) {
    if (v == 0) return "0";
    std::string s;
    while (v != 0) {
        s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    return s;
}

inline std::string to_string(Int v) {
    if (v < 0) {
        // magnitude of the most negative value still fits the unsigned type
        return "-" + to_string(static_cast<Count>(0) - static_cast<Count>(v));
    }
    return to_string(static_cast<Count>(v));
}

} // namespace cliquepoly
