#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "polylab/intpoly.hpp"
#include "polylab/modarith.hpp"

namespace polylab {

// Weight h_X: 2 e^{-X} for log q in (X - log 2, X], zero elsewhere.  The
// weighted count of distinct roots over window primes approximates the number
// of distinct irreducible factors.
struct WeightScheme {
    double X;
    explicit WeightScheme(double X_);
    double weight() const;  // 2 e^{-X}
};

enum class SumMode { exact, monte_carlo };

struct FactorEstimate {
    double value = 0;
    double std_error = 0;  // 0 in exact mode
    SumMode mode = SumMode::exact;
    double X = 0;
    uint64_t samples = 0;  // window primes visited (exact) or draws (MC)
};

inline constexpr double kMaxExactX = 18.0;

// Exact sum of distinct_root_count(p, q) * log q * 2e^{-X} over all window
// primes; X <= 18.  The parallel kernel accumulates fixed-size blocks inside
// each sieve segment and reduces them in index order, so results are
// byte-identical for any thread count.
FactorEstimate weighted_root_sum_exact(const IntPoly& p, const WeightScheme& w);
namespace ref {
FactorEstimate weighted_root_sum_exact(const IntPoly& p, const WeightScheme& w);
}

// Unbiased estimator: draws m uniformly from the window integers, scores
// width * 1{m prime} * count * log(m) * 2e^{-X}; sample i depends only on
// (seed, i).
FactorEstimate weighted_root_sum_mc(const IntPoly& p, const WeightScheme& w,
                                    uint64_t samples, uint64_t seed);

// Same sums with the count of multiplicity->=2 roots: the proper-power
// detector statistic.
FactorEstimate weighted_double_root_sum(const IntPoly& p, const WeightScheme& w,
                                        SumMode mode, uint64_t samples = 0,
                                        uint64_t seed = 0);

// Exact sum of log(q) * 2e^{-X} over window primes; approaches 1 as X grows.
double window_weight_total(const WeightScheme& w);

enum class Verdict {
    reducible_certified,
    irreducible_certified,
    irreducible_likely,
    reducible_likely,
    power_suspected,
    inconclusive,
};

std::string to_string(Verdict v);

struct VerdictConfig {
    std::optional<double> X;        // default 5 log(deg + 2)
    std::optional<SumMode> mode;    // default exact iff X <= 18
    uint64_t mc_samples = 100'000;
    uint64_t seed = 0;
    uint64_t cert_budget = 0;       // primes tried for a mod-q certificate; 0 -> max(16, 4 deg)
};

struct VerdictReport {
    Verdict verdict = Verdict::inconclusive;
    double X = 0;
    std::optional<FactorEstimate> factor_count;
    std::optional<FactorEstimate> double_root_sum;
    std::optional<uint64_t> certificate_q;   // irreducible-certified
    std::optional<IntPoly> certified_factor; // reducible-certified
    std::string note;
};

// Decision order: exhibited factor (x | p, rational root, or exact
// factorization at degree <= 10) certifies reducible; double-root sum > 0.5
// flags a suspected proper power before the single-factor rule can fire;
// a full-degree irreducible reduction mod q certifies irreducible; otherwise
// estimate in [0.7, 1.3] with std error < 0.1 reports irreducible-likely,
// estimate > 1.5 reducible-likely, anything else inconclusive.
VerdictReport verdict(const IntPoly& p, const VerdictConfig& cfg = {});

}  // namespace polylab
