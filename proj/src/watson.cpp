#include "stcore/watson.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "stcore/anderson.hpp"

namespace stcore {

Rational persson_u2(const Word& w) {
    const std::uint64_t s = w.s_count();
    const std::uint64_t t = w.t_count();
    if (s == 0 || t == 0) {
        throw std::invalid_argument("persson_u2: both samples must be nonempty (s=" +
                                    std::to_string(s) + ", t=" + std::to_string(t) + ")");
    }
    const auto counts = pattern_counts(w);
    const BigInt st = BigInt(s) * t;
    const Rational scaled = Rational(st * (st + 2), BigInt(24)) -
                            Rational(to_bigint(counts.stst) + to_bigint(counts.tsts), BigInt(2));
    return scaled * Rational(BigInt(2), st * (s + t));
}

Rational u2_from_core_size(std::uint64_t s, std::uint64_t t, Count size) {
    const BigInt n = BigInt(s) + t;
    const Rational shift(n * n - 1, BigInt(24));
    return (Rational(to_bigint(size)) + shift) * Rational(BigInt(2), BigInt(s) * t * n);
}

SizeU2Bridge size_u2_bridge(const BallotWord& w) {
    const BigInt s = w.s();
    const BigInt t = w.t();
    SizeU2Bridge b;
    b.size = to_bigint(size_from_word(w));
    b.u2 = persson_u2(w.word());
    const Rational shift((s + t) * (s + t) - 1, BigInt(24));
    b.residual = Rational(b.size) - (Rational(s * t * (s + t), BigInt(2)) * b.u2 - shift);
    return b;
}

U2Limit::U2Limit(double truncation_tolerance) : tolerance_(truncation_tolerance) {
    if (!(truncation_tolerance > 0.0 && truncation_tolerance <= 1e-6)) {
        throw std::invalid_argument("U2Limit: truncation tolerance must lie in (0, 1e-6]");
    }
}

TailEvaluation U2Limit::evaluate_tail(double x) const {
    TailEvaluation ev;
    if (!(x > 0.0)) return ev;  // P[U^2 > x] = 1 for x <= 0 (and NaN maps here too)
    constexpr double pi = std::numbers::pi;
    if (x < 1.0 / (4.0 * pi)) {
        // Successive term ratios are below exp(-1/x) < 1/2, so the remainder is under twice the next term.
        const double scale = std::sqrt(2.0 / (pi * x));
        double cdf = 0.0;
        double term = scale * std::exp(-1.0 / (8.0 * x));
        for (std::uint64_t k = 1;; ++k) {
            cdf += term;
            ev.terms = k;
            const double odd = static_cast<double>(2 * k + 1);
            term = scale * std::exp(-odd * odd / (8.0 * x));
            if (term < tolerance_ / 2.0) break;
        }
        ev.dual = true;
        ev.error_bound = 2.0 * term;
        ev.value = std::clamp(1.0 - cdf, 0.0, 1.0);
        return ev;
    }
    constexpr double two_pi2 = 2.0 * pi * pi;
    double sum = 0.0;
    double sign = 1.0;
    // the first term is always kept so far-tail values stay nonzero
    double term = 2.0 * std::exp(-two_pi2 * x);
    for (std::uint64_t m = 1;; ++m) {
        sum += sign * term;
        ev.terms = m;
        const double next = static_cast<double>(m + 1);
        term = 2.0 * std::exp(-two_pi2 * next * next * x);
        sign = -sign;
        if (term < tolerance_) break;
    }
    ev.error_bound = term;
    ev.value = std::clamp(sum, 0.0, 1.0);
    return ev;
}

double U2Limit::quantile(double p) const {
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("U2Limit::quantile: p must lie in (0, 1)");
    double lo = 0.0;
    double hi = 1.0;
    while (cdf(hi) < p) hi *= 2.0;
    for (int i = 0; i < 200 && hi - lo > 1e-15; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (cdf(mid) < p) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return hi;
}

double u2_tail(double x) { return U2Limit{}.tail(x); }
double u2_cdf(double x) { return U2Limit{}.cdf(x); }

EcdfComparison ks_against_limit(std::span<const double> samples, const U2Limit& law) {
    if (samples.empty()) throw std::invalid_argument("ks_against_limit: no samples");
    std::vector<double> sorted(samples.begin(), samples.end());
    std::sort(sorted.begin(), sorted.end());
    const auto n = static_cast<double>(sorted.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const double f = law.cdf(sorted[i]);
        const double above = static_cast<double>(i + 1) / n - f;
        const double below = f - static_cast<double>(i) / n;
        d = std::max({d, above, below});
    }
    return {std::clamp(d, 0.0, 1.0), sorted.size()};
}

}  // namespace stcore
