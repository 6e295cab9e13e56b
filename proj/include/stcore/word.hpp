#pragma once

// Words over the two-letter alphabet {S, T}: ballot words, lattice-path
// heights, subsequence pattern counts and the cycle-lemma rotation.
//
// Step convention used everywhere in this library: S moves the path up by t
// and T moves it down by s. A word with s letters S and t letters T is an
// s/t ballot word iff its path never dips below zero.

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <string>
#include <string_view>
#include <vector>

#include "stcore/numbers.hpp"

namespace stcore {

enum class Letter : std::uint8_t { S = 0, T = 1 };

inline constexpr char to_char(Letter l) { return l == Letter::S ? 'S' : 'T'; }

/// Immutable-after-construction sequence of letters, one bit per letter.
class Word {
public:
    Word() = default;

    /// Parses an ASCII string over {S, T}. Throws std::invalid_argument on any other byte.
    static Word parse(std::string_view text);
    /// S^s T^t.
    static Word sorted(std::size_t s, std::size_t t);

    void push_back(Letter l);

    std::size_t size() const { return size_; }
    bool empty() const { return size_ == 0; }
    std::size_t s_count() const { return size_ - t_count_; }
    std::size_t t_count() const { return t_count_; }

    Letter operator[](std::size_t i) const {
        return static_cast<Letter>((bits_[i >> 6] >> (i & 63)) & 1U);
    }

    /// The word read from position k onward, wrapping around: w[k..] w[..k].
    Word rotated(std::size_t k) const;

    std::string str() const;

    friend bool operator==(const Word& a, const Word& b) {
        return a.size_ == b.size_ && a.bits_ == b.bits_;
    }
    friend bool operator<(const Word& a, const Word& b) { return a.str() < b.str(); }

    class const_iterator {
    public:
        using iterator_category = std::random_access_iterator_tag;
        using value_type = Letter;
        using difference_type = std::ptrdiff_t;
        using pointer = void;
        using reference = Letter;

        const_iterator() = default;
        const_iterator(const Word* w, std::size_t i) : w_(w), i_(i) {}
        Letter operator*() const { return (*w_)[i_]; }
        const_iterator& operator++() { ++i_; return *this; }
        const_iterator operator++(int) { auto c = *this; ++i_; return c; }
        bool operator==(const const_iterator& o) const { return i_ == o.i_; }
        bool operator!=(const const_iterator& o) const { return i_ != o.i_; }

    private:
        const Word* w_ = nullptr;
        std::size_t i_ = 0;
    };

    const_iterator begin() const { return {this, 0}; }
    const_iterator end() const { return {this, size_}; }

private:
    std::vector<std::uint64_t> bits_;  // bit i set <=> letter i is T; unused high bits are zero
    std::size_t size_ = 0;
    std::size_t t_count_ = 0;
};

/// An s/t ballot word: gcd(s,t) = 1, s letters S, t letters T, path never below zero.
class BallotWord {
public:
    /// Validates every invariant; throws std::invalid_argument naming the first violation.
    BallotWord(Word w, std::uint64_t s, std::uint64_t t);
    /// Convenience: the word's own letter counts are taken as (s, t).
    explicit BallotWord(Word w);
    static BallotWord parse(std::string_view text) { return BallotWord(Word::parse(text)); }

    /// Skips validation in release builds; for producers that construct ballot
    /// words by a correct-by-construction procedure.
    static BallotWord trusted(Word w, std::uint64_t s, std::uint64_t t);

    const Word& word() const { return word_; }
    std::uint64_t s() const { return s_; }
    std::uint64_t t() const { return t_; }
    std::string str() const { return word_.str(); }

    friend bool operator==(const BallotWord& a, const BallotWord& b) {
        return a.s_ == b.s_ && a.t_ == b.t_ && a.word_ == b.word_;
    }

private:
    struct NoCheck {};
    BallotWord(Word w, std::uint64_t s, std::uint64_t t, NoCheck)
        : word_(std::move(w)), s_(s), t_(t) {}

    Word word_;
    std::uint64_t s_;
    std::uint64_t t_;
};

/// Subsequence occurrence counts of the patterns used by the size and U^2 formulas.
struct PatternCounts {
    Count stst = 0;
    Count tsts = 0;
    Count st = 0;
    Count ts = 0;

    friend bool operator==(const PatternCounts&, const PatternCounts&) = default;
};

/// Path heights h_0 = 0, h_i = h_{i-1} + t for S, h_{i-1} - s for T. Length |w| + 1.
std::vector<std::int64_t> prefix_heights(const Word& w, std::uint64_t s, std::uint64_t t);

/// True iff every prefix height is nonnegative. Throws std::invalid_argument
/// if the letter counts of w are not (s, t).
bool is_ballot(const Word& w, std::uint64_t s, std::uint64_t t);

/// Number of index-increasing embeddings of `pattern` in `w`. O(|w|·|pattern|).
/// Throws std::invalid_argument for an empty pattern and std::overflow_error
/// if the count does not fit in 128 bits.
Count count_subsequence(const Word& w, const Word& pattern);

/// #STST, #TSTS, #ST and #TS in a single pass.
PatternCounts pattern_counts(const Word& w);

struct Rotation {
    BallotWord word;
    std::size_t offset;  // result == w.rotated(offset)
};

/// The unique cyclic rotation of w that is s/t ballot (cycle lemma). O(|w|).
Rotation rotate_to_ballot(const Word& w, std::uint64_t s, std::uint64_t t);

}  // namespace stcore
