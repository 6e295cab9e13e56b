#include "stcore/sampling.hpp"

#include <array>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>

#include "stcore/anderson.hpp"

namespace stcore {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + (stream + 1) * 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("uniform_below: bound must be positive");
    // largest multiple of bound that fits in [0, 2^64)
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

Count size_normalizer(std::uint64_t s, std::uint64_t t) {
    return checked_mul(checked_mul(s, t), Count{s} + t) / 2;
}

Word sample_uniform_word(std::uint64_t s, std::uint64_t t, Rng& rng) {
    require_coprime(s, t);
    Word w;
    std::uint64_t left_s = s;
    std::uint64_t left = s + t;
    while (left > 0) {
        // next letter is S with probability left_s / left
        if (uniform_below(rng, left) < left_s) {
            w.push_back(Letter::S);
            --left_s;
        } else {
            w.push_back(Letter::T);
        }
        --left;
    }
    return w;
}

Count sample_core_size(std::uint64_t s, std::uint64_t t, Rng& rng) {
    return core_size_from_counts(s, t, pattern_counts(sample_uniform_word(s, t, rng)));
}

Partition sample_core_partition(std::uint64_t s, std::uint64_t t, Rng& rng) {
    const Word w = sample_uniform_word(s, t, rng);
    return word_to_partition(rotate_to_ballot(w, s, t).word);
}

std::vector<NormalizedSample> monte_carlo_normalized(const SampleConfig& cfg) {
    require_coprime(cfg.s, cfg.t);
    if (cfg.n == 0) throw std::invalid_argument("monte_carlo_normalized: n must be >= 1");
    if (cfg.shards == 0) throw std::invalid_argument("monte_carlo_normalized: shards must be >= 1");
    const double norm = to_double(size_normalizer(cfg.s, cfg.t));
    std::vector<NormalizedSample> out(cfg.n);

    auto run_shard = [&](unsigned k) {
        const std::uint64_t begin = cfg.n * k / cfg.shards;
        const std::uint64_t end = cfg.n * (k + 1) / cfg.shards;
        Rng rng(derive_seed(cfg.seed, k));
        for (std::uint64_t i = begin; i < end; ++i) {
            const Count size = sample_core_size(cfg.s, cfg.t, rng);
            out[i] = {size, to_double(size) / norm};
        }
    };
    if (cfg.shards == 1) {
        run_shard(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned k = 0; k < cfg.shards; ++k) pool.emplace_back(run_shard, k);
    }
    return out;
}

void write_samples_csv(std::ostream& os, const std::vector<NormalizedSample>& samples) {
    os << "index,raw_size,normalized\n";
    std::array<char, 64> buf{};
    for (std::size_t i = 0; i < samples.size(); ++i) {
        std::snprintf(buf.data(), buf.size(), "%.17g", samples[i].normalized);
        os << i << ',' << to_string(samples[i].raw_size) << ',' << buf.data() << '\n';
    }
}

namespace {

template <std::size_t Bytes>
void put_le(std::ostream& os, std::uint64_t v, const char* field) {
    if constexpr (Bytes < 8) {
        if (v >> (8 * Bytes)) {
            throw std::out_of_range(std::string("binary sample header: ") + field + " = " +
                                    std::to_string(v) + " does not fit in " +
                                    std::to_string(8 * Bytes) + " bits");
        }
    }
    std::array<char, Bytes> b{};
    for (std::size_t i = 0; i < Bytes; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xFF);
    os.write(b.data(), Bytes);
}

template <std::size_t Bytes>
std::uint64_t get_le(std::istream& is) {
    std::array<unsigned char, Bytes> b{};
    if (!is.read(reinterpret_cast<char*>(b.data()), Bytes)) {
        throw std::runtime_error("binary sample stream is truncated");
    }
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < Bytes; ++i) v |= std::uint64_t{b[i]} << (8 * i);
    return v;
}

}  // namespace

void write_samples_binary(std::ostream& os, std::uint64_t s, std::uint64_t t,
                          const std::vector<NormalizedSample>& samples) {
    os.write("CORE", 4);
    put_le<2>(os, kBinaryFormatVersion, "version");
    put_le<3>(os, s, "s");
    put_le<3>(os, t, "t");
    put_le<4>(os, samples.size(), "n");
    for (const auto& x : samples) {
        if (x.raw_size > std::numeric_limits<std::uint64_t>::max()) {
            throw std::out_of_range("raw size " + to_string(x.raw_size) + " does not fit in 64 bits");
        }
        put_le<8>(os, static_cast<std::uint64_t>(x.raw_size), "raw_size");
    }
}

BinarySamples read_samples_binary(std::istream& is) {
    std::array<char, 4> magic{};
    if (!is.read(magic.data(), 4) || std::string(magic.data(), 4) != "CORE") {
        throw std::runtime_error("not a binary sample stream (bad magic)");
    }
    BinarySamples out;
    out.version = static_cast<std::uint16_t>(get_le<2>(is));
    if (out.version != kBinaryFormatVersion) {
        throw std::runtime_error("unsupported binary sample version " + std::to_string(out.version));
    }
    out.s = get_le<3>(is);
    out.t = get_le<3>(is);
    const std::uint64_t n = get_le<4>(is);
    out.raw_sizes.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) out.raw_sizes.push_back(get_le<8>(is));
    return out;
}

}  // namespace stcore
