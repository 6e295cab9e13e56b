#pragma once

// Exact statistics over all (s,t)-cores.
//
// Every s/t ballot word is visited once (lexicographic, S < T), mapped to its
// core size through the pattern-count formula and histogrammed with
// arbitrary-precision counts. brute_force_cores is the independent oracle: it
// never touches ballot words, only hook lengths.

#include <cstdint>
#include <functional>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "stcore/numbers.hpp"
#include "stcore/partition.hpp"
#include "stcore/word.hpp"

namespace stcore {

struct SizeDistribution {
    std::uint64_t s = 0;
    std::uint64_t t = 0;
    std::map<std::uint64_t, BigInt> counts;  // size -> number of cores
    BigInt total = 0;

    friend bool operator==(const SizeDistribution&, const SizeDistribution&) = default;
};

struct MomentSummary {
    Rational mean;
    Rational variance;
    std::vector<Rational> raw;      // raw[k-1] = E[X^k]
    std::vector<Rational> central;  // central[k-1] = E[(X - mean)^k]
};

/// C(s+t, s)/(s+t). Throws std::invalid_argument unless gcd(s, t) = 1.
BigInt rational_catalan(std::uint64_t s, std::uint64_t t);

/// Calls `visit` for every s/t ballot word in lexicographic order (S < T).
void for_each_ballot_word(std::uint64_t s, std::uint64_t t,
                          const std::function<void(const BallotWord&)>& visit);

std::vector<BallotWord> enumerate_ballot_words(std::uint64_t s, std::uint64_t t);

/// Histogram of core sizes over all ballot words. With threads > 1 the search
/// is sharded by word prefix; the result does not depend on the thread count.
SizeDistribution exact_size_distribution(std::uint64_t s, std::uint64_t t, unsigned threads = 1);

/// Exact raw and central moments of orders 1..max(max_order, 2).
MomentSummary exact_moments(const SizeDistribution& d, unsigned max_order);

/// (s+t+1)(s-1)(t-1)/24
Rational closed_form_mean(std::uint64_t s, std::uint64_t t);
/// (s+t+1)(s+t)s(s-1)t(t-1)/1440
Rational closed_form_variance(std::uint64_t s, std::uint64_t t);

/// All (s,t)-cores by direct search over partitions of size <= (s^2-1)(t^2-1)/24,
/// filtered by hook lengths. Sorted ascending.
std::vector<Partition> brute_force_cores(std::uint64_t s, std::uint64_t t);

/// CSV with header "size,count".
void write_csv(std::ostream& os, const SizeDistribution& d);
/// {"s":..,"t":..,"total":"..","counts":{"size":"count",..}}; counts are decimal strings.
std::string to_json(const SizeDistribution& d);

}  // namespace stcore
