#pragma once

// Uniform random (s,t)-cores and Monte Carlo of the normalized core size.
//
// Two sampling paths with different guarantees:
//
//  * sample_core_size draws a uniform arrangement of s S's and t T's and
//    applies the size formula to it directly, WITHOUT rotating it to the
//    ballot word of its cyclic class. This is exact in law because
//    #STST + #TSTS is invariant under rotation and every rotation class has
//    exactly one ballot word. O(s + t) per sample.
//
//  * sample_core_partition performs the rotation and runs the bijection,
//    returning the actual partition. O(st) per sample.
//
// Randomness: std::mt19937_64 per shard, seeded from (seed, shard index)
// through SplitMix64. Integer draws use our own rejection sampler, so the
// sample stream for a given seed does not depend on the standard library.

#include <cstdint>
#include <istream>
#include <ostream>
#include <random>
#include <vector>

#include "stcore/numbers.hpp"
#include "stcore/partition.hpp"
#include "stcore/word.hpp"

namespace stcore {

using Rng = std::mt19937_64;

/// SplitMix64 finalizer applied to seed + golden-ratio increments; stream k of a seed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

/// Uniform integer in [0, bound), bound >= 1, by rejection on 64-bit draws.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);

struct SampleConfig {
    std::uint64_t s = 0;
    std::uint64_t t = 0;
    std::uint64_t n = 1;
    std::uint64_t seed = 0;
    unsigned shards = 1;  // output is reproducible for a fixed shard count
};

struct NormalizedSample {
    Count raw_size = 0;
    double normalized = 0.0;  // raw_size / (st(s+t)/2)
};

/// st(s+t)/2, always an integer.
Count size_normalizer(std::uint64_t s, std::uint64_t t);

/// Uniformly random arrangement of s letters S and t letters T.
Word sample_uniform_word(std::uint64_t s, std::uint64_t t, Rng& rng);

/// Size of a uniformly random (s,t)-core, via the rotation-free shortcut.
Count sample_core_size(std::uint64_t s, std::uint64_t t, Rng& rng);

/// A uniformly random (s,t)-core partition, via cycle-lemma rotation and the bijection.
Partition sample_core_partition(std::uint64_t s, std::uint64_t t, Rng& rng);

/// cfg.n normalized sizes. Shard k covers indices [k·n/shards, (k+1)·n/shards)
/// and draws from derive_seed(cfg.seed, k).
std::vector<NormalizedSample> monte_carlo_normalized(const SampleConfig& cfg);

/// CSV with header "index,raw_size,normalized".
void write_samples_csv(std::ostream& os, const std::vector<NormalizedSample>& samples);

/// Binary sample stream: a 16-byte little-endian header
///   bytes 0-3   magic "CORE"
///   bytes 4-5   format version (u16, currently 1)
///   bytes 6-8   s (u24)
///   bytes 9-11  t (u24)
///   bytes 12-15 n (u32)
/// followed by n raw sizes as little-endian u64.
/// Throws std::out_of_range if a field or a size does not fit.
void write_samples_binary(std::ostream& os, std::uint64_t s, std::uint64_t t,
                          const std::vector<NormalizedSample>& samples);

struct BinarySamples {
    std::uint16_t version = 0;
    std::uint64_t s = 0;
    std::uint64_t t = 0;
    std::vector<std::uint64_t> raw_sizes;
};

/// Throws std::runtime_error on a bad magic, unknown version or truncated stream.
BinarySamples read_samples_binary(std::istream& is);

inline constexpr std::uint16_t kBinaryFormatVersion = 1;

}  // namespace stcore
