#include <algorithm>
#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

#include "doctest.h"
#include "polylab/equidist.hpp"
#include "polylab/intpoly.hpp"
#include "polylab/rng.hpp"

using namespace polylab;

namespace {

// Convolution oracle: push the sign distribution through one term at a time.
WalkDistribution dp_walk(const WalkSpec& w) {
    const uint64_t q = w.q.value;
    WalkDistribution d;
    d.q = q;
    d.prob.assign(q * q, 0.0);
    d.prob[0] = 1.0;
    for (uint64_t i : w.exponents) {
        const auto [e1, e2] = walk_term(w.q, w.a, i);
        std::vector<double> nxt(q * q, 0.0);
        for (uint64_t u = 0; u < q; ++u)
            for (uint64_t v = 0; v < q; ++v) {
                const double m = d.prob[u * q + v];
                if (m == 0) continue;
                nxt[((u + e1) % q) * q + (v + e2) % q] += 0.5 * m;
                nxt[((u + q - e1) % q) * q + (v + q - e2) % q] += 0.5 * m;
            }
        d.prob = std::move(nxt);
    }
    return d;
}

}  // namespace

TEST_CASE("walk_term conventions at the edge") {
    CHECK(walk_term(Prime(7), 3, 0) == std::pair<uint64_t, uint64_t>{1, 0});  // 0 * 0^-1 = 0
    CHECK(walk_term(Prime(7), 0, 0) == std::pair<uint64_t, uint64_t>{1, 0});  // 0^0 = 1
    CHECK(walk_term(Prime(7), 0, 1) == std::pair<uint64_t, uint64_t>{0, 1});
    CHECK(walk_term(Prime(7), 3, 2) == std::pair<uint64_t, uint64_t>{2, 6});
    CHECK(walk_term(Prime(5), 2, 10) == std::pair<uint64_t, uint64_t>{4, 0});  // 10*2^9 = 5120
}

TEST_CASE("brute-force distribution equals the convolution oracle, dyadic-exactly") {
    CounterRng rng(51);
    for (int t = 0; t < 30; ++t) {
        const uint64_t q = std::vector<uint64_t>{3, 5, 7, 11, 13}[size_t(rng.below(5))];
        WalkSpec w{Prime(q), rng.below(q), {}};
        const uint64_t n = 1 + rng.below(12);
        uint64_t e = rng.below(3);
        for (uint64_t i = 0; i < n; ++i) {
            w.exponents.push_back(e);
            e += 1 + rng.below(3);
        }
        const WalkDistribution oracle = dp_walk(w);
        const WalkDistribution fast = walk_distribution_bruteforce(w);
        const WalkDistribution serial = ref::walk_distribution_bruteforce(w);
        REQUIRE(fast.prob.size() == oracle.prob.size());
        for (size_t i = 0; i < oracle.prob.size(); ++i) {
            CHECK(fast.prob[i] == oracle.prob[i]);
            CHECK(serial.prob[i] == oracle.prob[i]);
        }
    }
}

TEST_CASE("single-term Fourier coefficient: cos(2 pi / 5)") {
    const WalkSpec w{Prime(5), 1, {1}};  // term (1, 1)
    CHECK(fourier_coeff(w, 1, 0) == doctest::Approx(0.30901699437494742).epsilon(1e-12));
    CHECK(fourier_coeff(w, 0, 0) == doctest::Approx(1.0));
    // xi = (1, 2): phase (1*1 + 2*1)/5 -> cos(6 pi / 5)
    CHECK(fourier_coeff(w, 1, 2) == doctest::Approx(std::cos(6 * M_PI / 5)).epsilon(1e-12));
}

TEST_CASE("Fourier inversion reproduces the brute-force law") {
    CounterRng rng(52);
    for (int t = 0; t < 25; ++t) {
        const uint64_t q = std::vector<uint64_t>{3, 7, 17, 31}[size_t(rng.below(4))];
        WalkSpec w{Prime(q), 1 + rng.below(q - 1), {}};
        const uint64_t n = 1 + rng.below(10);
        for (uint64_t i = 0; i < n; ++i) w.exponents.push_back(rng.below(40));
        std::sort(w.exponents.begin(), w.exponents.end());
        w.exponents.erase(std::unique(w.exponents.begin(), w.exponents.end()),
                          w.exponents.end());
        const double tv =
            total_variation(walk_distribution_bruteforce(w), walk_distribution_fourier(w));
        CHECK(tv <= 1e-10);
    }
}

TEST_CASE("enumeration budget: more than 24 terms is refused") {
    WalkSpec w{Prime(3), 1, {}};
    for (uint64_t i = 0; i < 25; ++i) w.exponents.push_back(i);
    CHECK_THROWS_AS(walk_distribution_bruteforce(w), budget_error);
    CHECK_THROWS_AS(max_point_mass_1d(Prime(3), 1, w.exponents), budget_error);
}

TEST_CASE("point mass at a = 1 is the central binomial: C(16,8)/2^16") {
    std::vector<uint64_t> exps;
    for (uint64_t i = 1; i <= 16; ++i) exps.push_back(i);
    // q = 37 > 32 keeps the signed sum from wrapping
    CHECK(max_point_mass_1d(Prime(37), 1, exps) == 0.196380615234375);
    // with wraparound masses merge but never shrink the maximum
    CHECK(max_point_mass_1d(Prime(5), 1, exps) >= 0.196380615234375);
}

TEST_CASE("Monte Carlo point mass tracks the exact value") {
    std::vector<uint64_t> exps;
    for (uint64_t i = 1; i <= 12; ++i) exps.push_back(i);
    const double exact = max_point_mass_1d(Prime(13), 7, exps);
    const PointMassEstimate est = max_point_mass_1d_mc(Prime(13), 7, exps, 40000, 3);
    CHECK(est.std_error > 0);
    CHECK(std::abs(est.value - exact) < 5 * est.std_error + 1e-9);
    // determinism in (samples, seed)
    const PointMassEstimate again = max_point_mass_1d_mc(Prime(13), 7, exps, 40000, 3);
    CHECK(est.value == again.value);
    CHECK(est.std_error == again.std_error);
}

TEST_CASE("least_abs_residue folds into (-q/2, q/2]") {
    const Prime q(11);
    CHECK(least_abs_residue(0, q) == 0);
    CHECK(least_abs_residue(5, q) == 5);
    CHECK(least_abs_residue(6, q) == -5);
    CHECK(least_abs_residue(10, q) == -1);
}

TEST_CASE("smallness predicate: pinned cases and guards") {
    // a = 1, xi = (1, 0): every term is 1, far below 53^(1/2)/4 = 1.82
    CHECK(lemma6_smallness_holds(Prime(53), 1, 1, 0, 1, 0, 3, 11));
    // a = 1, xi = (0, 1): terms run through e mod 53 and leave the small band
    CHECK(!lemma6_smallness_holds(Prime(53), 1, 0, 1, 1, 0, 3, 11));
    CHECK_THROWS_AS(lemma6_smallness_holds(Prime(53), 1, 1, 0, 1, 0, 2, 11),
                    std::invalid_argument);  // l >= 3
    CHECK_THROWS_AS(lemma6_smallness_holds(Prime(53), 1, 1, 0, 1, 0, 3, 9),
                    std::invalid_argument);  // r must be prime > l^2
    CHECK_THROWS_AS(lemma6_smallness_holds(Prime(53), 1, 1, 0, 1, 0, 3, 7),
                    std::invalid_argument);
}

TEST_CASE("double roots kill both recurrence component sums") {
    CounterRng rng(53);
    for (int t = 0; t < 200; ++t) {
        const uint64_t q = std::vector<uint64_t>{5, 13, 53}[size_t(rng.below(3))];
        const uint64_t a = rng.below(q);
        // (x - a)^2 * (x + c) mod q
        std::vector<uint64_t> alpha(4);
        const uint64_t c = rng.below(q);
        const uint64_t a2 = a * a % q;
        alpha[3] = 1;
        alpha[2] = (c + 2 * (q - a)) % q;
        alpha[1] = (a2 + 2 * (q - a) % q * c) % q;
        alpha[0] = a2 * c % q;
        for (uint64_t j0 = 0; j0 < 3; ++j0) {
            const auto [s1, s2] = recurrence_component_sums(Prime(q), a, alpha, j0);
            CHECK(s1 == 0);
            CHECK(s2 == 0);
        }
    }
    // a simple root does not: (x - 1)(x - 2) at a = 1, derivative sum is 1*1 + ...
    const auto [s1, s2] = recurrence_component_sums(Prime(7), 1, {2, 4, 1}, 0);
    CHECK(s1 == 0);   // value sum vanishes at the root
    CHECK(s2 != 0);   // derivative sum does not
}

TEST_CASE("annihilator membership under recurrence, products, and gcd") {
    CounterRng rng(54);
    for (int t = 0; t < 200; ++t) {
        // characteristic polynomial p(x) = x^2 - r1 x - r0 annihilates the stream
        const long r0 = long(rng.below(3)) - 1, r1 = long(rng.below(3)) - 1;
        std::vector<long long> init{long(rng.below(5)) - 2, long(rng.below(5)) - 2};
        const auto seq = recurrence_sequence(init, {r1, r0}, 40);
        const IntPoly p{-r0, -r1, 1};
        CHECK(lambda_membership(seq, p));
        // multiples stay inside the annihilator set
        const IntPoly m1 = p * IntPoly{long(rng.below(5)) - 2, 1};
        const IntPoly m2 = p * IntPoly{long(rng.below(5)) - 2, long(rng.below(3)) + 1};
        CHECK(lambda_membership(seq, m1));
        CHECK(lambda_membership(seq, m2));
        CHECK(lambda_membership(seq, IntPoly::gcd(m1, m2)));
    }
    // the zero polynomial annihilates everything; x - 2 annihilates powers of 2
    CHECK(lambda_membership({1, 2, 4, 8, 16}, IntPoly::zero()));
    CHECK(lambda_membership({1, 2, 4, 8, 16}, IntPoly{-2, 1}));
    CHECK(!lambda_membership({1, 2, 4, 8, 17}, IntPoly{-2, 1}));
    CHECK_THROWS_AS(lambda_membership({1, 2}, IntPoly{0, 0, 0, 1}), std::invalid_argument);
}

TEST_CASE("recurrence_sequence matches a hand iteration and guards overflow") {
    const auto fib = recurrence_sequence({0, 1}, {1, 1}, 12);
    CHECK(fib == std::vector<long long>{0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89});
    CHECK_THROWS_AS(recurrence_sequence({1, 1}, {2000000000, 2000000000}, 64),
                    std::overflow_error);
}

TEST_CASE("cosine decay bound behind the Fourier product") {
    // cos(t) <= exp(-t^2 / 2) on [0, pi]; each walk factor with a term of
    // least absolute residue b therefore decays like exp(-2 (pi b / q)^2)
    for (uint64_t q : {5ull, 53ull, 101ull}) {
        for (uint64_t b = 1; 2 * b <= q; ++b) {
            const double t = 2 * M_PI * double(b) / double(q);
            CHECK(std::cos(t) <= std::exp(-t * t / 2) + 1e-12);
        }
    }
}

TEST_CASE("parallel and serial brute force agree bit for bit at scale") {
    WalkSpec w{Prime(31), 3, {}};
    for (uint64_t i = 0; i < 18; ++i) w.exponents.push_back(i);
    const WalkDistribution a = walk_distribution_bruteforce(w);
    const WalkDistribution b = ref::walk_distribution_bruteforce(w);
    REQUIRE(a.prob.size() == b.prob.size());
    for (size_t i = 0; i < a.prob.size(); ++i) CHECK(a.prob[i] == b.prob[i]);
    CHECK(max_fourier_coeff(w) <= 1.0);
}
