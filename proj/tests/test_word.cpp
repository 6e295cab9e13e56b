#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "oracles.hpp"
#include "stcore/word.hpp"

using namespace stcore;

namespace {
const char* kWorkedWord = "STSTSSTSTTTSSTTTT";  // the 7/10 ballot word of the worked (7,10) example
}

TEST_SUITE("words") {

TEST_CASE("parse and print") {
    const Word w = Word::parse(kWorkedWord);
    CHECK(w.size() == 17);
    CHECK(w.s_count() == 7);
    CHECK(w.t_count() == 10);
    CHECK(w.str() == kWorkedWord);
    CHECK(Word::parse("").empty());
    CHECK_THROWS_AS(Word::parse("STX"), std::invalid_argument);
    CHECK(Word::sorted(2, 3).str() == "SSTTT");

    // crosses a 64-bit block boundary
    std::string long_word;
    for (int i = 0; i < 150; ++i) long_word += (i % 3 == 0) ? 'T' : 'S';
    CHECK(Word::parse(long_word).str() == long_word);
    CHECK(Word::parse(long_word).rotated(70).str() == long_word.substr(70) + long_word.substr(0, 70));
}

TEST_CASE("is_ballot examples") {
    CHECK(is_ballot(Word::parse("SSTTT"), 2, 3));
    CHECK_FALSE(is_ballot(Word::parse("TSSTT"), 2, 3));
    CHECK(is_ballot(Word::parse(kWorkedWord), 7, 10));
    CHECK_THROWS_AS(is_ballot(Word::parse("SSTT"), 2, 3), std::invalid_argument);
}

TEST_CASE("BallotWord validates") {
    CHECK_NOTHROW(BallotWord::parse(kWorkedWord));
    CHECK_THROWS_AS(BallotWord::parse("TSSTT"), std::invalid_argument);
    CHECK_THROWS_AS(BallotWord::parse("SSTT"), std::invalid_argument);  // gcd 2
    CHECK_THROWS_AS(BallotWord(Word::parse("SSTTT"), 3, 2), std::invalid_argument);
}

TEST_CASE("count_subsequence examples") {
    CHECK(count_subsequence(Word::parse("STSS"), Word::parse("TS")) == 2);
    CHECK(count_subsequence(Word::parse("SSTT"), Word::parse("STST")) == 0);
    const Word fig = Word::parse(kWorkedWord);
    const auto stst = oracle::naive_count(kWorkedWord, "STST");
    const auto tsts = oracle::naive_count(kWorkedWord, "TSTS");
    CHECK(stst + tsts == 350);
    CHECK(count_subsequence(fig, Word::parse("STST")) == stst);
    CHECK(count_subsequence(fig, Word::parse("TSTS")) == tsts);
    CHECK(count_subsequence(fig, Word::parse("STST")) + count_subsequence(fig, Word::parse("TSTS")) == 350);
    CHECK_THROWS_AS(count_subsequence(fig, Word{}), std::invalid_argument);
}

TEST_CASE("pattern_counts examples") {
    const auto sorted = pattern_counts(Word::sorted(5, 8));
    CHECK(sorted.stst == 0);
    CHECK(sorted.tsts == 0);
    CHECK(sorted.ts == 0);
    CHECK(sorted.st == 40);

    const auto c = pattern_counts(Word::parse("STSS"));
    CHECK(c.ts == 2);
    CHECK(c.st == 1);
    CHECK(c.ts + c.st == 3);

    const auto fig = pattern_counts(Word::parse(kWorkedWord));
    CHECK(fig.stst == 282);
    CHECK(fig.tsts == 68);
    CHECK(fig.ts == 20);
    CHECK(fig.st == 50);
}

TEST_CASE("prefix_heights examples") {
    CHECK(prefix_heights(Word::parse("SSTTT"), 2, 3) == std::vector<std::int64_t>{0, 3, 6, 4, 2, 0});
    CHECK(prefix_heights(Word{}, 2, 3) == std::vector<std::int64_t>{0});

    const auto h = prefix_heights(Word::parse(kWorkedWord), 7, 10);
    CHECK(h.back() == 0);
    CHECK(*std::min_element(h.begin(), h.end()) == 0);
    std::multiset<std::int64_t> vertices(h.begin(), h.end() - 1);
    CHECK(vertices == std::multiset<std::int64_t>{0, 10, 3, 13, 6, 16, 26, 19, 29, 22, 15, 8, 18, 28, 21, 14, 7});
}

TEST_CASE("rotate_to_ballot examples") {
    auto r = rotate_to_ballot(Word::parse("SSTTT"), 2, 3);
    CHECK(r.word.str() == "SSTTT");
    CHECK(r.offset == 0);

    r = rotate_to_ballot(Word::parse("TTTSS"), 2, 3);
    CHECK(r.word.str() == "SSTTT");
    CHECK(r.offset == 3);

    const Word fig = Word::parse(kWorkedWord);
    for (std::size_t k = 0; k < fig.size(); ++k) {
        const auto rk = rotate_to_ballot(fig.rotated(k), 7, 10);
        CHECK(rk.word.str() == kWorkedWord);
        CHECK(fig.rotated(k).rotated(rk.offset) == fig);
    }

    CHECK_THROWS_AS(rotate_to_ballot(Word::parse("SSTT"), 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(rotate_to_ballot(Word::parse("SSTT"), 2, 3), std::invalid_argument);
}

TEST_CASE("cycle lemma: exactly one ballot rotation, exhaustive for s + t <= 12") {
    for (auto [s, t] : oracle::coprime_pairs(12)) {
        for (const auto& text : oracle::words_with_counts(s, t)) {
            int ballot_rotations = 0;
            std::string unique;
            for (std::size_t k = 0; k < text.size(); ++k) {
                const std::string rot = text.substr(k) + text.substr(0, k);
                if (oracle::naive_is_ballot(rot, s, t)) {
                    ++ballot_rotations;
                    unique = rot;
                }
            }
            REQUIRE(ballot_rotations == 1);
            REQUIRE(rotate_to_ballot(Word::parse(text), s, t).word.str() == unique);
        }
    }
}

TEST_CASE("#STST + #TSTS is rotation invariant") {
    for (std::size_t len = 1; len <= 10; ++len) {
        for (const auto& text : oracle::all_words(len)) {
            const Word w = Word::parse(text);
            const auto base = pattern_counts(w);
            for (std::size_t k = 1; k < len; ++k) {
                const auto c = pattern_counts(w.rotated(k));
                REQUIRE(c.stst + c.tsts == base.stst + base.tsts);
            }
        }
    }
    std::mt19937_64 rng(20240611);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t len = 20 + rng() % 200;
        Word w;
        for (std::size_t i = 0; i < len; ++i) w.push_back(rng() & 1 ? Letter::T : Letter::S);
        const auto base = pattern_counts(w);
        const std::size_t k = rng() % len;
        const auto c = pattern_counts(w.rotated(k));
        CHECK(c.stst + c.tsts == base.stst + base.tsts);
    }
}

TEST_CASE("st + ts = #S · #T and the DP agrees with brute force on all words up to length 10") {
    const std::vector<std::string> patterns = {"S",   "T",   "ST",  "TS",  "SS",   "TT",   "STS",
                                               "TST", "SST", "TTS", "STST", "TSTS", "SSTT", "TTTT"};
    for (std::size_t len = 0; len <= 10; ++len) {
        for (const auto& text : oracle::all_words(len)) {
            const Word w = Word::parse(text);
            const auto c = pattern_counts(w);
            REQUIRE(c.st + c.ts == Count{w.s_count()} * w.t_count());
            REQUIRE(c.stst == oracle::naive_count(text, "STST"));
            REQUIRE(c.tsts == oracle::naive_count(text, "TSTS"));
            for (const auto& p : patterns) {
                REQUIRE(count_subsequence(w, Word::parse(p)) == oracle::naive_count(text, p));
            }
        }
    }
}

TEST_CASE("is_ballot iff min prefix height >= 0; closed iff #S·t = #T·s") {
    for (std::size_t len = 1; len <= 10; ++len) {
        for (const auto& text : oracle::all_words(len)) {
            const Word w = Word::parse(text);
            const std::uint64_t s = w.s_count(), t = w.t_count();
            for (std::uint64_t ps = 1; ps <= 4; ++ps) {
                for (std::uint64_t pt = 1; pt <= 4; ++pt) {
                    const auto h = prefix_heights(w, ps, pt);
                    REQUIRE((h.back() == 0) == (s * pt == t * ps));
                }
            }
            const auto h = prefix_heights(w, s, t);
            REQUIRE(is_ballot(w, s, t) == (*std::min_element(h.begin(), h.end()) >= 0));
            REQUIRE(is_ballot(w, s, t) == oracle::naive_is_ballot(text, s, t));
        }
    }
}

TEST_CASE("128-bit accumulators: exact beyond 2^64, overflow reported") {
    // S^a T^b S^c T^d has exactly a·b·c·d occurrences of STST
    const std::size_t q = 250000;
    Word w = Word::sorted(q, q);
    for (std::size_t i = 0; i < q; ++i) w.push_back(Letter::S);
    for (std::size_t i = 0; i < q; ++i) w.push_back(Letter::T);
    const Count expected = Count{q} * q * q * q;
    CHECK(expected > Count{~std::uint64_t{0}});
    const auto c = pattern_counts(w);
    CHECK(c.stst == expected);
    CHECK(c.tsts == 0);  // no S follows the last T block
    CHECK(count_subsequence(w, Word::parse("STST")) == expected);

    // C(2000, 25) ~ 1e52 does not fit in 128 bits
    CHECK_THROWS_AS(count_subsequence(Word::sorted(2000, 0), Word::sorted(25, 0)), std::overflow_error);
    CHECK_THROWS_AS(checked_add(kCountMax, 1), std::overflow_error);
    CHECK_THROWS_AS(checked_mul(kCountMax / 2, 3), std::overflow_error);
    CHECK_THROWS_AS(checked_sub(1, 2), std::overflow_error);
}

}  // TEST_SUITE
