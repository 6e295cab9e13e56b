#include "stcore/word.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace stcore {

Word Word::parse(std::string_view text) {
    Word w;
    w.bits_.reserve((text.size() + 63) / 64);
    for (std::size_t i = 0; i < text.size(); ++i) {
        switch (text[i]) {
            case 'S': w.push_back(Letter::S); break;
            case 'T': w.push_back(Letter::T); break;
            default:
                throw std::invalid_argument("invalid letter '" + std::string(1, text[i]) +
                                            "' at position " + std::to_string(i) +
                                            " (expected S or T)");
        }
    }
    return w;
}

Word Word::sorted(std::size_t s, std::size_t t) {
    Word w;
    w.bits_.reserve((s + t + 63) / 64);
    for (std::size_t i = 0; i < s; ++i) w.push_back(Letter::S);
    for (std::size_t i = 0; i < t; ++i) w.push_back(Letter::T);
    return w;
}

void Word::push_back(Letter l) {
    if ((size_ & 63) == 0) bits_.push_back(0);
    if (l == Letter::T) {
        bits_.back() |= std::uint64_t{1} << (size_ & 63);
        ++t_count_;
    }
    ++size_;
}

Word Word::rotated(std::size_t k) const {
    if (size_ == 0) return *this;
    k %= size_;
    Word out;
    out.bits_.reserve(bits_.size());
    for (std::size_t i = k; i < size_; ++i) out.push_back((*this)[i]);
    for (std::size_t i = 0; i < k; ++i) out.push_back((*this)[i]);
    return out;
}

std::string Word::str() const {
    std::string out;
    out.reserve(size_);
    for (Letter l : *this) out.push_back(to_char(l));
    return out;
}

namespace {

void require_counts(const Word& w, std::uint64_t s, std::uint64_t t) {
    if (w.s_count() != s || w.t_count() != t) {
        throw std::invalid_argument("word " + w.str() + " has " + std::to_string(w.s_count()) +
                                    " S and " + std::to_string(w.t_count()) +
                                    " T, expected (s,t) = (" + std::to_string(s) + "," +
                                    std::to_string(t) + ")");
    }
}

void require_height_range(std::uint64_t s, std::uint64_t t, std::size_t length) {
    // |h_i| <= length * max(s,t); keep it inside int64.
    const auto bound = static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max());
    const std::uint64_t step = std::max(s, t);
    if (step != 0 && length != 0 && step > bound / length) {
        throw std::overflow_error("path heights exceed 64-bit range");
    }
}

}  // namespace

BallotWord::BallotWord(Word w, std::uint64_t s, std::uint64_t t)
    : word_(std::move(w)), s_(s), t_(t) {
    require_coprime(s, t);
    require_counts(word_, s, t);
    if (!is_ballot(word_, s, t)) {
        throw std::invalid_argument("word " + word_.str() + " is not " + std::to_string(s) + "/" +
                                    std::to_string(t) + " ballot");
    }
}

BallotWord::BallotWord(Word w) : BallotWord(w, w.s_count(), w.t_count()) {}

BallotWord BallotWord::trusted(Word w, std::uint64_t s, std::uint64_t t) {
#ifndef NDEBUG
    return BallotWord(std::move(w), s, t);
#else
    return BallotWord(std::move(w), s, t, NoCheck{});
#endif
}

std::vector<std::int64_t> prefix_heights(const Word& w, std::uint64_t s, std::uint64_t t) {
    require_height_range(s, t, w.size());
    const auto up = static_cast<std::int64_t>(t);
    const auto down = static_cast<std::int64_t>(s);
    std::vector<std::int64_t> h;
    h.reserve(w.size() + 1);
    std::int64_t c = 0;
    h.push_back(c);
    for (Letter l : w) {
        c += (l == Letter::S) ? up : -down;
        h.push_back(c);
    }
    return h;
}

bool is_ballot(const Word& w, std::uint64_t s, std::uint64_t t) {
    require_counts(w, s, t);
    require_height_range(s, t, w.size());
    const auto up = static_cast<std::int64_t>(t);
    const auto down = static_cast<std::int64_t>(s);
    std::int64_t c = 0;
    for (Letter l : w) {
        c += (l == Letter::S) ? up : -down;
        if (c < 0) return false;
    }
    return true;
}

Count count_subsequence(const Word& w, const Word& pattern) {
    if (pattern.empty()) throw std::invalid_argument("count_subsequence: empty pattern");
    const std::size_t m = pattern.size();
    // ways[j] = number of embeddings of pattern[0..j) into the prefix read so far
    std::vector<Count> ways(m + 1, 0);
    ways[0] = 1;
    for (Letter l : w) {
        for (std::size_t j = m; j >= 1; --j) {
            if (pattern[j - 1] == l) ways[j] = checked_add(ways[j], ways[j - 1]);
        }
    }
    return ways[m];
}

PatternCounts pattern_counts(const Word& w) {
    // Prefix-DP over every prefix of STST and TSTS; longer prefixes first so
    // each letter is used at most once per embedding.
    Count s = 0, t = 0, st = 0, ts = 0, sts = 0, tst = 0, stst = 0, tsts = 0;
    for (Letter l : w) {
        if (l == Letter::S) {
            tsts = checked_add(tsts, tst);
            sts = checked_add(sts, st);
            ts = checked_add(ts, t);
            s += 1;
        } else {
            stst = checked_add(stst, sts);
            tst = checked_add(tst, ts);
            st = checked_add(st, s);
            t += 1;
        }
    }
    return {stst, tsts, st, ts};
}

Rotation rotate_to_ballot(const Word& w, std::uint64_t s, std::uint64_t t) {
    require_coprime(s, t);
    require_counts(w, s, t);
    const auto h = prefix_heights(w, s, t);
    const std::size_t n = w.size();
    std::size_t argmin = 0;
    bool tie = false;
    for (std::size_t i = 1; i < n; ++i) {
        if (h[i] < h[argmin]) {
            argmin = i;
            tie = false;
        } else if (h[i] == h[argmin]) {
            tie = true;
        }
    }
    if (tie) {
        throw std::logic_error("rotate_to_ballot: path minimum is not unique for word " + w.str());
    }
    return {BallotWord::trusted(w.rotated(argmin), s, t), argmin};
}

}  // namespace stcore
