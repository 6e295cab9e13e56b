#include "stcore/numbers.hpp"

#include <algorithm>

namespace stcore {

std::string to_string(Count v) {
    if (v == 0) return "0";
    std::string out;
    while (v != 0) {
        out.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

BigInt to_bigint(Count v) {
    BigInt hi = static_cast<std::uint64_t>(v >> 64);
    BigInt lo = static_cast<std::uint64_t>(v);
    return (hi << 64) | lo;
}

double to_double(Count v) {
    return static_cast<double>(static_cast<std::uint64_t>(v >> 64)) * 18446744073709551616.0 +
           static_cast<double>(static_cast<std::uint64_t>(v));
}

std::string to_string(const Rational& q) {
    const BigInt num = boost::multiprecision::numerator(q);
    const BigInt den = boost::multiprecision::denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

void require_coprime(std::uint64_t s, std::uint64_t t) {
    if (s == 0 || t == 0) {
        throw std::invalid_argument("s and t must be positive (got s=" + std::to_string(s) +
                                    ", t=" + std::to_string(t) + ")");
    }
    if (const auto g = std::gcd(s, t); g != 1) {
        throw std::invalid_argument("s and t must be coprime (gcd(" + std::to_string(s) + ", " +
                                    std::to_string(t) + ") = " + std::to_string(g) + ")");
    }
}

}  // namespace stcore
