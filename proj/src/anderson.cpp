#include "stcore/anderson.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace stcore {

namespace {

std::uint64_t checked_area(std::uint64_t s, std::uint64_t t) {
    const Count st = checked_mul(s, t);
    if (st > Count{1} << 40) {
        throw std::length_error("s*t = " + to_string(st) +
                                " is too large for the O(st) downset sieve");
    }
    return static_cast<std::uint64_t>(st);
}

}  // namespace

Downset word_to_downset(const BallotWord& w) {
    const std::uint64_t s = w.s();
    const std::uint64_t t = w.t();
    const std::uint64_t st = checked_area(s, t);
    std::vector<bool> reached(st + 1, false);
    for (auto h : prefix_heights(w.word(), s, t)) reached[static_cast<std::uint64_t>(h)] = true;
    for (std::uint64_t n = 1; n <= st; ++n) {
        if (reached[n]) continue;
        reached[n] = (n >= s && reached[n - s]) || (n >= t && reached[n - t]);
    }
    HookSet a;
    for (std::uint64_t n = 1; n < st; ++n) {
        if (!reached[n]) a.push_back(n);
    }
    return Downset::trusted(std::move(a), s, t);
}

BallotWord downset_to_word(const Downset& a) {
    const std::uint64_t s = a.s();
    const std::uint64_t t = a.t();
    const std::uint64_t st = checked_area(s, t);
    std::vector<bool> in_a(st + 1, false);
    for (auto x : a.elements()) {
        if (x <= st) in_a[x] = true;
    }
    Word w;
    std::uint64_t c = 0;
    std::uint64_t n_s = 0;
    std::uint64_t n_t = 0;
    auto fail = [&](const std::string& why) {
        throw std::invalid_argument("downset {" + format_hookset(a.elements()) +
                                    "} does not trace a closed " + std::to_string(s) + "/" +
                                    std::to_string(t) + " path: " + why);
    };
    for (std::uint64_t step = 0; step < s + t; ++step) {
        if (c >= s && !in_a[c - s]) {
            c -= s;
            ++n_t;
            w.push_back(Letter::T);
        } else {
            c += t;
            ++n_s;
            w.push_back(Letter::S);
        }
        if (n_s > s || n_t > t || c > st) fail("letter budget exceeded at step " + std::to_string(step));
    }
    if (c != 0) fail("walk ends at " + std::to_string(c));
    return BallotWord::trusted(std::move(w), s, t);
}

Partition word_to_partition(const BallotWord& w) {
    return partition_from_hookset(word_to_downset(w).elements());
}

BallotWord partition_to_word(const Partition& p, std::uint64_t s, std::uint64_t t) {
    require_coprime(s, t);
    for (auto q : {s, t}) {
        if (!is_p_core(p, q)) {
            throw std::invalid_argument("partition '" + p.str() + "' has a hook of length " +
                                        std::to_string(q) + ", so it is not a (" +
                                        std::to_string(s) + "," + std::to_string(t) + ")-core");
        }
    }
    return downset_to_word(Downset::trusted(first_column_hooks(p), s, t));
}

Count max_core_size(std::uint64_t s, std::uint64_t t) {
    const Count s2 = checked_mul(s, s);
    const Count t2 = checked_mul(t, t);
    const Count prod = checked_mul(s2 - 1, t2 - 1);
    if (prod % 24 != 0) {
        throw std::logic_error("(s^2-1)(t^2-1) is not divisible by 24 for (s,t) = (" +
                               std::to_string(s) + "," + std::to_string(t) + ")");
    }
    return prod / 24;
}

Count core_size_from_counts(std::uint64_t s, std::uint64_t t, const PatternCounts& counts) {
    const Count max = max_core_size(s, t);
    const Count c = checked_add(counts.stst, counts.tsts);
    if (c % 2 != 0) {
        throw std::logic_error("#STST + #TSTS = " + to_string(c) + " is odd");
    }
    if (c / 2 > max) {
        throw std::logic_error("(#STST + #TSTS)/2 exceeds the maximal core size");
    }
    return max - c / 2;
}

Count size_from_word(const BallotWord& w) {
    return core_size_from_counts(w.s(), w.t(), pattern_counts(w.word()));
}

DownsetSizeCheck ts_count_identity_check(const BallotWord& w) {
    const auto half_area = static_cast<__int128>((w.s() - 1) * (w.t() - 1) / 2);
    const auto ts = static_cast<__int128>(pattern_counts(w.word()).ts);
    return {static_cast<std::int64_t>(half_area - ts),
            static_cast<std::int64_t>(word_to_downset(w).size())};
}

}  // namespace stcore
