#include <cmath>
#include <cstdint>

#include "doctest.h"
#include "polylab/common.hpp"
#include "polylab/factorcount.hpp"

using namespace polylab;

TEST_CASE("weight scheme: h_X is 2 e^-X and rejects X <= 1") {
    CHECK(WeightScheme(12).weight() == doctest::Approx(2 * std::exp(-12.0)).epsilon(1e-15));
    CHECK_THROWS_AS(WeightScheme(1.0), std::invalid_argument);
    CHECK_THROWS_AS(WeightScheme(0.5), std::invalid_argument);
}

TEST_CASE("window weight total at X = 12 (frozen) and normalization trend") {
    const double t12 = window_weight_total(WeightScheme(12));
    CHECK(t12 == doctest::Approx(0.998103).epsilon(2e-6));
    // the sum tightens toward 1 as the window moves out
    const double t14 = window_weight_total(WeightScheme(14));
    CHECK(std::abs(t14 - 1.0) <= std::abs(t12 - 1.0));
    CHECK(std::abs(t14 - 1.0) < 3 * 14 * 14 * std::exp(-7.0));
    CHECK_THROWS_AS(window_weight_total(WeightScheme(19)), budget_error);
}

TEST_CASE("parallel exact sum equals the serial reference bit for bit") {
    const IntPoly p{1, -1, 0, 1};  // x^3 - x + 1
    const WeightScheme w(13);
    const FactorEstimate a = weighted_root_sum_exact(p, w);
    const FactorEstimate b = ref::weighted_root_sum_exact(p, w);
    CHECK(a.value == b.value);
    CHECK(a.samples == b.samples);
    CHECK(a.samples > 0);
    CHECK(a.std_error == 0);
    CHECK(a.mode == SumMode::exact);
    // one distinct irreducible factor -> sum near 1
    CHECK(a.value == doctest::Approx(1.0).epsilon(0.1));
}

TEST_CASE("Monte Carlo sum is deterministic in the seed and tracks exact") {
    const IntPoly p{-2, 0, 1};  // x^2 - 2
    const WeightScheme w(13);
    const double exact = weighted_root_sum_exact(p, w).value;
    const FactorEstimate mc = weighted_root_sum_mc(p, w, 200000, 11);
    CHECK(mc.mode == SumMode::monte_carlo);
    CHECK(mc.samples == 200000);
    CHECK(mc.std_error > 0);
    CHECK(std::abs(mc.value - exact) < 5 * mc.std_error);
    const FactorEstimate again = weighted_root_sum_mc(p, w, 200000, 11);
    CHECK(mc.value == again.value);
    CHECK(mc.std_error == again.std_error);
    CHECK_THROWS_AS(weighted_root_sum_mc(p, w, 0, 1), std::invalid_argument);
}

TEST_CASE("double-root sum of a square equals the root sum of its base") {
    const IntPoly base{1, 0, 1};
    const IntPoly square = base * base;
    const WeightScheme w(12);
    // every root of (x^2+1)^2 mod q is a double root, so the two window sums
    // agree prime by prime
    const double dsum = weighted_double_root_sum(square, w, SumMode::exact).value;
    CHECK(dsum == weighted_root_sum_exact(base, w).value);
    CHECK(dsum > 0.5);
    // squarefree input: no double roots once the window clears the discriminant
    CHECK(weighted_double_root_sum(base, w, SumMode::exact).value == 0.0);
}

TEST_CASE("exact backend refuses X beyond 18 and the zero polynomial") {
    CHECK_THROWS_AS(weighted_root_sum_exact(IntPoly{1, 0, 1}, WeightScheme(18.5)),
                    budget_error);
    CHECK_THROWS_AS(weighted_root_sum_exact(IntPoly::zero(), WeightScheme(12)),
                    std::invalid_argument);
}

TEST_CASE("verdict: certified outcomes on pinned inputs") {
    VerdictReport r = verdict(IntPoly{1, 0, 1});  // x^2 + 1
    CHECK(r.verdict == Verdict::irreducible_certified);
    REQUIRE(r.certificate_q.has_value());
    CHECK(*r.certificate_q == 3);  // reducible mod 2, irreducible mod 3

    r = verdict(IntPoly{-1, 0, 1});  // x^2 - 1
    CHECK(r.verdict == Verdict::reducible_certified);
    REQUIRE(r.certified_factor.has_value());
    CHECK(*r.certified_factor == IntPoly{-1, 1});
    CHECK(r.note == "linear factor");

    r = verdict(IntPoly{0, 2, 0, 1});  // x | x^3 + 2x
    CHECK(r.verdict == Verdict::reducible_certified);
    CHECK(*r.certified_factor == IntPoly{0, 1});

    r = verdict(IntPoly{-5, 1});  // degree 1: first certificate prime is 2
    CHECK(r.verdict == Verdict::irreducible_certified);
    CHECK(*r.certificate_q == 2);
}

TEST_CASE("verdict: proper power flagged before any other rule") {
    VerdictConfig cfg;
    cfg.X = 14;
    const VerdictReport r = verdict(IntPoly{1, 0, 2, 0, 1}, cfg);  // (x^2+1)^2
    CHECK(r.verdict == Verdict::power_suspected);
    REQUIRE(r.double_root_sum.has_value());
    CHECK(r.double_root_sum->value > 0.5);
    CHECK(!r.certificate_q.has_value());
}

TEST_CASE("verdict: x^4 + 1 has no modular certificate yet reads irreducible") {
    const VerdictReport r = verdict(IntPoly{1, 0, 0, 0, 1});
    CHECK(r.verdict == Verdict::irreducible_likely);
    CHECK(!r.certificate_q.has_value());
    REQUIRE(r.factor_count.has_value());
    CHECK(r.factor_count->value > 0.7);
    CHECK(r.factor_count->value < 1.3);
}

TEST_CASE("verdict: rational-root-free split caught by exact factorization") {
    const IntPoly p{4, 0, 0, 0, 1};  // (x^2-2x+2)(x^2+2x+2)
    const VerdictReport r = verdict(p);
    CHECK(r.verdict == Verdict::reducible_certified);
    CHECK(r.note == "exact factorization");
    REQUIRE(r.certified_factor.has_value());
    CHECK(r.certified_factor->degree() == 2);
    IntPoly q;
    CHECK(p.try_divide(*r.certified_factor, q));
}

TEST_CASE("verdict guards and Monte Carlo default past X = 18") {
    CHECK_THROWS_AS(verdict(IntPoly{7}), std::invalid_argument);
    CHECK_THROWS_AS(verdict(IntPoly::zero()), std::invalid_argument);
    VerdictConfig cfg;
    cfg.X = 0.5;
    CHECK_THROWS_AS(verdict(IntPoly{1, 0, 1}, cfg), std::invalid_argument);

    cfg.X = 25;  // beyond the exact budget: mode defaults to Monte Carlo
    cfg.mc_samples = 20000;
    cfg.seed = 3;
    const VerdictReport r = verdict(IntPoly{1, 1, 0, 1}, cfg);
    REQUIRE(r.factor_count.has_value());
    CHECK(r.factor_count->mode == SumMode::monte_carlo);
    CHECK(r.factor_count->samples == 20000);
}

TEST_CASE("verdict strings") {
    CHECK(to_string(Verdict::reducible_certified) == "reducible-certified");
    CHECK(to_string(Verdict::irreducible_certified) == "irreducible-certified");
    CHECK(to_string(Verdict::irreducible_likely) == "irreducible-likely");
    CHECK(to_string(Verdict::reducible_likely) == "reducible-likely");
    CHECK(to_string(Verdict::power_suspected) == "power-suspected");
    CHECK(to_string(Verdict::inconclusive) == "inconclusive");
}
