#pragma once

// Watson's two-sample U^2 statistic and its limiting law.
//
// For a circular word w with s letters S and t letters T (the merged order of
// two samples on the circle), Persson's expression gives
//
//     st(s+t)/2 · U^2 = st(st+2)/24 - (#STST + #TSTS)/2.
//
// Against the core size formula this differs only by the constant
// ((s+t)^2 - 1)/24, which is what ties core sizes to U^2.
//
// The limit law is evaluated through its tail series
//
//     P[U^2 > x] = 2 Σ_{m>=1} (-1)^{m-1} exp(-2 m^2 π^2 x),
//
// with E[U^2] = 1/12 and Var[U^2] = 1/360. For small x that series cancels
// badly, so below x = 1/(4π) the CDF is summed from its theta-dual
//
//     P[U^2 <= x] = sqrt(2/(πx)) Σ_{k>=0} exp(-(2k+1)^2 / (8x)),
//
// whose terms are all positive.

#include <cstddef>
#include <cstdint>
#include <span>

#include "stcore/numbers.hpp"
#include "stcore/word.hpp"

namespace stcore {

inline constexpr double kU2Mean = 1.0 / 12.0;
inline constexpr double kU2Variance = 1.0 / 360.0;

/// Exact two-sample U^2 of w; s = #S(w) and t = #T(w) must both be positive.
/// Coprimality is not required.
Rational persson_u2(const Word& w);

struct SizeU2Bridge {
    BigInt size;
    Rational u2;
    Rational residual;  // size - (st(s+t)/2 · u2 - ((s+t)^2 - 1)/24); always 0
};

SizeU2Bridge size_u2_bridge(const BallotWord& w);

/// U^2 implied by a core size: (size + ((s+t)^2 - 1)/24) / (st(s+t)/2).
Rational u2_from_core_size(std::uint64_t s, std::uint64_t t, Count size);

struct TailEvaluation {
    double value = 1.0;
    std::size_t terms = 0;
    double error_bound = 0.0;
    bool dual = false;  // summed through the small-x CDF series
};

/// Evaluator for the limiting U^2 law.
class U2Limit {
public:
    /// Throws std::invalid_argument unless 0 < tolerance <= 1e-6.
    explicit U2Limit(double truncation_tolerance = 1e-12);

    double tolerance() const { return tolerance_; }

    /// Full evaluation record of P[U^2 > x].
    TailEvaluation evaluate_tail(double x) const;
    double tail(double x) const { return evaluate_tail(x).value; }
    double cdf(double x) const { return 1.0 - tail(x); }
    /// Smallest x with cdf(x) >= p, by bisection. Requires 0 < p < 1.
    double quantile(double p) const;

private:
    double tolerance_;
};

double u2_tail(double x);
double u2_cdf(double x);

struct EcdfComparison {
    double ks_distance = 0.0;
    std::size_t sample_size = 0;
};

/// One-sample Kolmogorov-Smirnov sup distance between the empirical CDF of
/// `samples` and the limiting U^2 CDF. Throws std::invalid_argument on empty input.
EcdfComparison ks_against_limit(std::span<const double> samples, const U2Limit& law = U2Limit{});

}  // namespace stcore
