#pragma once

// Anderson's bijection
//
//     s/t ballot words  <->  (s,t) downsets  <->  (s,t)-core partitions
//
// and the closed-form core size in terms of the subsequence counts #STST and
// #TSTS of the ballot word:
//
//     size = (s^2 - 1)(t^2 - 1)/24 - (#STST + #TSTS)/2
//
// The path of a ballot word (S = +t, T = -s) visits exactly the minimal
// elements of the complement of its downset; the downset is everything in
// [1, st - s - t] that the upward closure of the path misses.

#include <cstdint>

#include "stcore/numbers.hpp"
#include "stcore/partition.hpp"
#include "stcore/word.hpp"

namespace stcore {

/// O(st) reachability sieve over [0, st].
Downset word_to_downset(const BallotWord& w);

/// Greedy walk from 0: step down (T) whenever c - s is a nonnegative value
/// outside A, otherwise step up (S). Throws std::invalid_argument if the walk
/// does not close at 0 after s + t steps with the right letter counts.
BallotWord downset_to_word(const Downset& a);

Partition word_to_partition(const BallotWord& w);

/// Throws std::invalid_argument naming the offending hook length if p is not an (s,t)-core.
BallotWord partition_to_word(const Partition& p, std::uint64_t s, std::uint64_t t);

/// (s^2 - 1)(t^2 - 1)/24, the size of the largest (s,t)-core.
Count max_core_size(std::uint64_t s, std::uint64_t t);

/// Core size from the pattern counts of any word with s letters S and t letters T.
/// Both divisibilities are checked; a violation throws std::logic_error.
Count core_size_from_counts(std::uint64_t s, std::uint64_t t, const PatternCounts& counts);

/// O(s + t) core size of the partition corresponding to w.
Count size_from_word(const BallotWord& w);

struct DownsetSizeCheck {
    std::int64_t predicted;  // (s-1)(t-1)/2 - #TS(w)
    std::int64_t actual;     // |word_to_downset(w)|
};

DownsetSizeCheck ts_count_identity_check(const BallotWord& w);

}  // namespace stcore
