#include "doctest.h"

#include <cmath>
#include <map>
#include <sstream>

#include "oracles.hpp"
#include "stcore/anderson.hpp"
#include "stcore/enumeration.hpp"
#include "stcore/sampling.hpp"

using namespace stcore;

namespace {

constexpr double kAlpha = 1e-6;

// Exact size law as bins aligned with `support`.
std::vector<double> exact_probs(std::uint64_t s, std::uint64_t t, std::vector<std::uint64_t>& support) {
    const auto d = exact_size_distribution(s, t);
    std::vector<double> probs;
    support.clear();
    for (const auto& [size, count] : d.counts) {
        support.push_back(size);
        probs.push_back(Rational(count, d.total).convert_to<double>());
    }
    return probs;
}

}  // namespace

TEST_SUITE("sampling") {

TEST_CASE("uniform_below and seed derivation") {
    Rng rng(1);
    std::vector<double> hits(7, 0.0);
    for (int i = 0; i < 70000; ++i) hits[uniform_below(rng, 7)] += 1;
    CHECK(oracle::chi_square_stat(hits, std::vector<double>(7, 1.0 / 7)) <
          oracle::chi_square_critical(6, kAlpha));
    CHECK_THROWS_AS(uniform_below(rng, 0), std::invalid_argument);
    CHECK(derive_seed(5, 0) != derive_seed(5, 1));
    CHECK(derive_seed(5, 0) != derive_seed(6, 0));
    CHECK(derive_seed(5, 3) == derive_seed(5, 3));
}

TEST_CASE("sample_uniform_word: (1,1) halves and (2,3) arrangements are uniform") {
    Rng rng(11);
    std::map<std::string, double> freq;
    for (int i = 0; i < 100000; ++i) freq[sample_uniform_word(1, 1, rng).str()] += 1;
    CHECK(freq.size() == 2);
    CHECK(oracle::chi_square_stat({freq["ST"], freq["TS"]}, {0.5, 0.5}) < oracle::chi_square_critical(1, kAlpha));

    freq.clear();
    for (int i = 0; i < 100000; ++i) {
        const Word w = sample_uniform_word(2, 3, rng);
        REQUIRE(w.s_count() == 2);
        freq[w.str()] += 1;
    }
    REQUIRE(freq.size() == 10);
    std::vector<double> observed;
    for (const auto& [w, c] : freq) {
        observed.push_back(c);
        CHECK(std::abs(c / 1e5 - 0.1) < 3 * std::sqrt(0.1 * 0.9 / 1e5));
    }
    CHECK(oracle::chi_square_stat(observed, std::vector<double>(10, 0.1)) < oracle::chi_square_critical(9, kAlpha));
}

TEST_CASE("fixed seed gives an identical stream") {
    Rng a(99), b(99);
    for (int i = 0; i < 100; ++i) REQUIRE(sample_uniform_word(13, 20, a) == sample_uniform_word(13, 20, b));
}

TEST_CASE("sample_core_size: exact law at enumeration scale") {
    Rng rng(3);
    std::vector<double> hits(2, 0.0);
    for (int i = 0; i < 100000; ++i) {
        const Count size = sample_core_size(2, 3, rng);
        REQUIRE(size <= 1);
        hits[static_cast<std::size_t>(size)] += 1;
    }
    CHECK(oracle::chi_square_stat(hits, {0.5, 0.5}) < oracle::chi_square_critical(1, kAlpha));

    for (int i = 0; i < 100; ++i) CHECK(sample_core_size(1, 8, rng) == 0);

    std::vector<std::uint64_t> support;
    const auto probs = exact_probs(5, 7, support);
    std::map<std::uint64_t, double> freq;
    for (int i = 0; i < 100000; ++i) freq[static_cast<std::uint64_t>(sample_core_size(5, 7, rng))] += 1;
    std::vector<double> observed;
    for (auto size : support) observed.push_back(freq[size]);
    CHECK(freq.size() == support.size());
    CHECK(oracle::chi_square_stat(observed, probs) <
          oracle::chi_square_critical(static_cast<double>(support.size() - 1), kAlpha));
}

TEST_CASE("sample_core_partition: uniform over cores and always a core") {
    Rng rng(4);
    std::vector<double> hits(2, 0.0);
    for (int i = 0; i < 100000; ++i) {
        const Partition p = sample_core_partition(2, 3, rng);
        REQUIRE((p == Partition{} || p == Partition({1})));
        hits[p.size()] += 1;
    }
    CHECK(oracle::chi_square_stat(hits, {0.5, 0.5}) < oracle::chi_square_critical(1, kAlpha));

    for (int i = 0; i < 50; ++i) CHECK(sample_core_partition(1, 6, rng) == Partition{});

    // each of the 66 (5,7)-cores equally likely
    const auto cores = brute_force_cores(5, 7);
    REQUIRE(cores.size() == 66);
    std::map<Partition, double> freq;
    for (int i = 0; i < 100000; ++i) {
        const Partition p = sample_core_partition(5, 7, rng);
        REQUIRE(is_p_core(p, 5));
        REQUIRE(is_p_core(p, 7));
        freq[p] += 1;
    }
    CHECK(freq.size() == cores.size());
    std::vector<double> observed;
    for (const auto& p : cores) observed.push_back(freq[p]);
    CHECK(oracle::chi_square_stat(observed, std::vector<double>(cores.size(), 1.0 / 66)) <
          oracle::chi_square_critical(65, kAlpha));

    for (int i = 0; i < 200; ++i) {
        const Partition p = sample_core_partition(13, 20, rng);
        REQUIRE(is_p_core(p, 13));
        REQUIRE(is_p_core(p, 20));
    }
}

TEST_CASE("size shortcut and partition sampler agree in distribution (two-sample chi-square)") {
    Rng rng(8);
    std::map<std::uint64_t, std::pair<double, double>> bins;
    const int n = 100000;
    for (int i = 0; i < n; ++i) {
        bins[static_cast<std::uint64_t>(sample_core_size(4, 7, rng))].first += 1;
        bins[sample_core_partition(4, 7, rng).size()].second += 1;
    }
    double x2 = 0.0;
    for (const auto& [size, ab] : bins) {
        const auto [a, b] = ab;
        x2 += (a - b) * (a - b) / (a + b);  // equal sample sizes
    }
    CHECK(x2 < oracle::chi_square_critical(static_cast<double>(bins.size() - 1), kAlpha));
}

TEST_CASE("monte_carlo_normalized") {
    auto xs = monte_carlo_normalized({2, 3, 1000, 5, 1});
    for (const auto& x : xs) {
        REQUIRE((x.normalized == 0.0 || x.normalized == 1.0 / 15.0));
        REQUIRE(x.normalized == static_cast<double>(x.raw_size) / 15.0);
    }
    CHECK(size_normalizer(2, 3) == 15);
    CHECK(size_normalizer(100, 101) == 1015050);

    const SampleConfig cfg{13, 20, 500, 42, 1};
    const auto a = monte_carlo_normalized(cfg);
    const auto b = monte_carlo_normalized(cfg);
    for (std::size_t i = 0; i < a.size(); ++i) REQUIRE(a[i].raw_size == b[i].raw_size);

    const SampleConfig sharded{13, 20, 501, 42, 4};
    const auto c = monte_carlo_normalized(sharded);
    const auto d = monte_carlo_normalized(sharded);
    for (std::size_t i = 0; i < c.size(); ++i) REQUIRE(c[i].raw_size == d[i].raw_size);

    const double bound = to_double(max_core_size(13, 20)) / to_double(size_normalizer(13, 20));
    for (const auto& x : c) REQUIRE((x.normalized >= 0.0 && x.normalized <= bound));

    CHECK_THROWS_AS(monte_carlo_normalized({4, 6, 10, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(monte_carlo_normalized({4, 5, 0, 1, 1}), std::invalid_argument);
}

TEST_CASE("raw mean and variance within 3 sigma of the closed forms") {
    for (auto [s, t] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{{7, 10}, {13, 20}, {100, 101}}) {
        const std::uint64_t n = 100000;
        const auto xs = monte_carlo_normalized({s, t, n, 2024, 1});
        double m1 = 0.0;
        for (const auto& x : xs) m1 += to_double(x.raw_size);
        m1 /= n;
        double m2 = 0.0, m4 = 0.0;
        for (const auto& x : xs) {
            const double d = to_double(x.raw_size) - m1;
            m2 += d * d;
            m4 += d * d * d * d;
        }
        m2 /= n - 1;
        m4 /= n;
        const double mean = closed_form_mean(s, t).convert_to<double>();
        const double var = closed_form_variance(s, t).convert_to<double>();
        INFO("(s,t) = (" << s << "," << t << ") mean " << m1 << " vs " << mean << ", var " << m2 << " vs " << var);
        CHECK(std::abs(m1 - mean) <= 3 * std::sqrt(var / n));
        CHECK(std::abs(m2 - var) <= 3 * std::sqrt((m4 - m2 * m2) / n));
    }
    // (7,10): mean 40.5
    CHECK(closed_form_mean(7, 10) == Rational(81, 2));
}

TEST_CASE("CSV and binary sample streams") {
    const auto xs = monte_carlo_normalized({2, 3, 4, 1, 1});
    std::ostringstream csv;
    write_samples_csv(csv, xs);
    CHECK(csv.str().rfind("index,raw_size,normalized\n", 0) == 0);

    std::ostringstream bin(std::ios::binary);
    const auto big = monte_carlo_normalized({100, 101, 10, 3, 1});
    write_samples_binary(bin, 100, 101, big);
    const std::string bytes = bin.str();
    REQUIRE(bytes.size() == 16 + 8 * 10);
    CHECK(bytes.substr(0, 4) == "CORE");
    CHECK(bytes[4] == 1);
    CHECK(bytes[5] == 0);
    CHECK(static_cast<unsigned char>(bytes[6]) == 100);
    CHECK(static_cast<unsigned char>(bytes[9]) == 101);
    CHECK(static_cast<unsigned char>(bytes[12]) == 10);

    std::istringstream in(bytes, std::ios::binary);
    const auto back = read_samples_binary(in);
    CHECK(back.version == kBinaryFormatVersion);
    CHECK(back.s == 100);
    CHECK(back.t == 101);
    REQUIRE(back.raw_sizes.size() == 10);
    for (std::size_t i = 0; i < 10; ++i) CHECK(back.raw_sizes[i] == big[i].raw_size);

    std::istringstream truncated(bytes.substr(0, 30), std::ios::binary);
    CHECK_THROWS_AS(read_samples_binary(truncated), std::runtime_error);
    std::istringstream bad_magic("XXXX" + bytes.substr(4), std::ios::binary);
    CHECK_THROWS_AS(read_samples_binary(bad_magic), std::runtime_error);
    std::ostringstream sink;
    CHECK_THROWS_AS(write_samples_binary(sink, 1u << 24, 3, xs), std::out_of_range);
}

}  // TEST_SUITE
