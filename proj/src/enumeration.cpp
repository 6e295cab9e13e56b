#include "stcore/enumeration.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "json.hpp"
#include "stcore/anderson.hpp"

namespace stcore {

BigInt rational_catalan(std::uint64_t s, std::uint64_t t) {
    require_coprime(s, t);
    const std::uint64_t n = s + t;
    const std::uint64_t k = std::min(s, t);
    BigInt binom = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        binom *= n - k + i;
        binom /= i;
    }
    if (binom % n != 0) throw std::logic_error("C(s+t, s) not divisible by s+t");
    return binom / n;
}

namespace {

struct Prefix {
    Word word;
    std::uint64_t n_s = 0;
    std::uint64_t n_t = 0;
};

// Depth-first extension of a feasible prefix, S before T. A prefix is
// feasible iff its height #S·t - #T·s is nonnegative; the all-T tail of any
// feasible prefix with all S used keeps it feasible, so no further bound is needed.
template <class Leaf>
void extend(std::uint64_t s, std::uint64_t t, Prefix& p, Leaf& leaf) {
    if (p.n_s == s && p.n_t == t) {
        leaf(p.word);
        return;
    }
    if (p.n_s < s) {
        Prefix next{p.word, p.n_s + 1, p.n_t};
        next.word.push_back(Letter::S);
        extend(s, t, next, leaf);
    }
    if (p.n_t < t) {
        const auto h = static_cast<__int128>(p.n_s) * t - static_cast<__int128>(p.n_t + 1) * s;
        if (h >= 0) {
            Prefix next{p.word, p.n_s, p.n_t + 1};
            next.word.push_back(Letter::T);
            extend(s, t, next, leaf);
        }
    }
}

// Feasible prefixes at the first depth that yields at least `want` of them.
std::vector<Prefix> shard_prefixes(std::uint64_t s, std::uint64_t t, std::size_t want) {
    std::vector<Prefix> level{Prefix{}};
    for (std::uint64_t depth = 0; depth < s + t && level.size() < want; ++depth) {
        std::vector<Prefix> next;
        for (const auto& p : level) {
            if (p.n_s < s) {
                Prefix q = p;
                q.word.push_back(Letter::S);
                ++q.n_s;
                next.push_back(std::move(q));
            }
            if (p.n_t < t &&
                static_cast<__int128>(p.n_s) * t >= static_cast<__int128>(p.n_t + 1) * s) {
                Prefix q = p;
                q.word.push_back(Letter::T);
                ++q.n_t;
                next.push_back(std::move(q));
            }
        }
        level = std::move(next);
    }
    return level;
}

}  // namespace

void for_each_ballot_word(std::uint64_t s, std::uint64_t t,
                          const std::function<void(const BallotWord&)>& visit) {
    require_coprime(s, t);
    Prefix root;
    auto leaf = [&](const Word& w) { visit(BallotWord::trusted(w, s, t)); };
    extend(s, t, root, leaf);
}

std::vector<BallotWord> enumerate_ballot_words(std::uint64_t s, std::uint64_t t) {
    std::vector<BallotWord> out;
    for_each_ballot_word(s, t, [&](const BallotWord& w) { out.push_back(w); });
    return out;
}

SizeDistribution exact_size_distribution(std::uint64_t s, std::uint64_t t, unsigned threads) {
    require_coprime(s, t);
    threads = std::max(1U, threads);
    using Histogram = std::map<std::uint64_t, std::uint64_t>;

    auto prefixes = shard_prefixes(s, t, threads == 1 ? 1 : 8 * static_cast<std::size_t>(threads));
    std::vector<Histogram> partial(threads);
    auto run_shard = [&](unsigned shard) {
        Histogram& hist = partial[shard];
        auto leaf = [&](const Word& w) {
            const Count size = core_size_from_counts(s, t, pattern_counts(w));
            ++hist[static_cast<std::uint64_t>(size)];
        };
        for (std::size_t i = shard; i < prefixes.size(); i += threads) extend(s, t, prefixes[i], leaf);
    };
    if (threads == 1) {
        run_shard(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned k = 0; k < threads; ++k) pool.emplace_back(run_shard, k);
    }

    SizeDistribution d;
    d.s = s;
    d.t = t;
    for (const auto& hist : partial) {
        for (const auto& [size, count] : hist) {
            d.counts[size] += count;
            d.total += count;
        }
    }
    return d;
}

MomentSummary exact_moments(const SizeDistribution& d, unsigned max_order) {
    if (d.total == 0) throw std::invalid_argument("exact_moments: empty distribution");
    const unsigned order = std::max(2U, max_order);
    MomentSummary m;
    m.raw.assign(order, Rational(0));
    for (const auto& [size, count] : d.counts) {
        BigInt power = 1;
        for (unsigned k = 0; k < order; ++k) {
            power *= size;
            m.raw[k] += Rational(power * count);
        }
    }
    for (auto& r : m.raw) r /= Rational(d.total);
    m.mean = m.raw[0];

    m.central.assign(order, Rational(0));
    for (const auto& [size, count] : d.counts) {
        const Rational dev = Rational(size) - m.mean;
        Rational power = 1;
        for (unsigned k = 0; k < order; ++k) {
            power *= dev;
            m.central[k] += power * count;
        }
    }
    for (auto& c : m.central) c /= Rational(d.total);
    m.variance = m.central[1];
    return m;
}

Rational closed_form_mean(std::uint64_t s, std::uint64_t t) {
    const BigInt S = s, T = t;
    return Rational((S + T + 1) * (S - 1) * (T - 1), BigInt(24));
}

Rational closed_form_variance(std::uint64_t s, std::uint64_t t) {
    const BigInt S = s, T = t;
    return Rational((S + T + 1) * (S + T) * S * (S - 1) * T * (T - 1), BigInt(1440));
}

namespace {

// Grows partitions upward: every new row goes on top and is at least as long
// as the current top row. Hooks of a box depend only on its own row and the
// rows below it, so the hooks of lower rows are final once placed, and a
// partition is a core only if each of its bottom segments is.
struct CoreSearch {
    std::uint64_t s;
    std::uint64_t t;
    std::uint64_t budget;
    std::vector<std::uint64_t> rows_bottom_up;
    std::vector<std::uint64_t> col_height;
    std::vector<Partition> found;

    void record() {
        found.emplace_back(std::vector<std::uint64_t>(rows_bottom_up.rbegin(), rows_bottom_up.rend()));
    }

    void grow(std::uint64_t size) {
        const std::uint64_t top = rows_bottom_up.empty() ? 1 : rows_bottom_up.back();
        for (std::uint64_t r = top; size + r <= budget; ++r) {
            if (col_height.size() < r) col_height.resize(r, 0);
            bool ok = true;
            for (std::uint64_t j = 0; j < r && ok; ++j) {
                const std::uint64_t hook = r - j + col_height[j];
                ok = hook != s && hook != t;
            }
            if (!ok) continue;
            rows_bottom_up.push_back(r);
            for (std::uint64_t j = 0; j < r; ++j) ++col_height[j];
            record();
            grow(size + r);
            for (std::uint64_t j = 0; j < r; ++j) --col_height[j];
            rows_bottom_up.pop_back();
        }
    }
};

}  // namespace

std::vector<Partition> brute_force_cores(std::uint64_t s, std::uint64_t t) {
    require_coprime(s, t);
    // the bound is the Olsson-Stanton size of the largest core; computed
    // directly rather than through the pattern-count module
    const BigInt bound = (BigInt(s) * s - 1) * (BigInt(t) * t - 1) / 24;
    if (bound > 100000) throw std::length_error("brute_force_cores: (s,t) too large to search");
    CoreSearch search{s, t, static_cast<std::uint64_t>(bound), {}, {}, {}};
    search.record();  // empty partition
    search.grow(0);
    std::sort(search.found.begin(), search.found.end());
    return std::move(search.found);
}

void write_csv(std::ostream& os, const SizeDistribution& d) {
    os << "size,count\n";
    for (const auto& [size, count] : d.counts) os << size << ',' << count.str() << '\n';
}

std::string to_json(const SizeDistribution& d) {
    nlohmann::ordered_json counts = nlohmann::ordered_json::object();
    for (const auto& [size, count] : d.counts) counts[std::to_string(size)] = count.str();
    nlohmann::ordered_json j;
    j["s"] = d.s;
    j["t"] = d.t;
    j["total"] = d.total.str();
    j["counts"] = std::move(counts);
    return j.dump();
}

}  // namespace stcore
