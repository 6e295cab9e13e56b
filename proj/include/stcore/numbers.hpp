#pragma once

// Integer types shared by every module.
//
// Pattern counts and core sizes live in `Count`, an unsigned 128-bit integer
// with explicitly checked arithmetic. Subsequence counts for words of length
// n are bounded by C(n, 4) < n^4 / 24, so `Count` is exact for words up to
// roughly 10^9 letters; in practice the limiting factor is memory.
//
// Exact statistics (catalan counts, histograms, moments) use Boost's
// arbitrary precision integers and rationals.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace stcore {

using Count = unsigned __int128;
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline constexpr Count kCountMax = ~Count{0};

inline Count checked_add(Count a, Count b) {
    Count r;
    if (__builtin_add_overflow(a, b, &r)) {
        throw std::overflow_error("stcore: 128-bit accumulator overflow in addition");
    }
    return r;
}

inline Count checked_sub(Count a, Count b) {
    if (b > a) {
        throw std::overflow_error("stcore: 128-bit accumulator underflow in subtraction");
    }
    return a - b;
}

inline Count checked_mul(Count a, Count b) {
    Count r;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw std::overflow_error("stcore: 128-bit accumulator overflow in multiplication");
    }
    return r;
}

std::string to_string(Count v);
BigInt to_bigint(Count v);
double to_double(Count v);

/// Rational in lowest terms, formatted as "p/q" or just "p" when q == 1.
std::string to_string(const Rational& q);

/// Throws std::invalid_argument unless s, t >= 1 and gcd(s, t) == 1.
void require_coprime(std::uint64_t s, std::uint64_t t);

inline bool coprime(std::uint64_t s, std::uint64_t t) { return std::gcd(s, t) == 1; }

}  // namespace stcore
