#include <cmath>
#include <complex>

#include "doctest.h"
#include "polylab/common.hpp"
#include "polylab/intpoly.hpp"
#include "polylab/mahler.hpp"
#include "polylab/rng.hpp"

using namespace polylab;

TEST_CASE("complex_roots on factored forms") {
    const RootSet r = complex_roots(IntPoly{-6, 11, -6, 1});  // (x-1)(x-2)(x-3)
    REQUIRE(r.roots.size() == 3);
    double prod = 1;
    for (const auto& z : r.roots) {
        CHECK(std::abs(z.imag()) < 1e-9);
        prod *= double(z.real());
    }
    CHECK(prod == doctest::Approx(6.0).epsilon(1e-9));
    CHECK(r.max_err < 1e-9);

    const RootSet c = complex_roots(IntPoly{1, 0, 1});
    REQUIRE(c.roots.size() == 2);
    for (const auto& z : c.roots) CHECK(std::abs(std::abs(z.imag()) - 1.0) < 1e-12);
}

TEST_CASE("golden ratio: M(x^2 - x - 1) = 1.618033988749895") {
    const MahlerResult m = mahler_measure(IntPoly{-1, -1, 1});
    CHECK(m.value == doctest::Approx(1.6180339887498949).epsilon(1e-12));
    CHECK(m.error_bound < 1e-9);
}

TEST_CASE("cyclotomic and monomial measures are 1") {
    CHECK(mahler_measure(IntPoly{1, 1}).value == doctest::Approx(1.0));
    CHECK(mahler_measure(IntPoly{1, 1, 1}).value == doctest::Approx(1.0));        // x^2+x+1
    CHECK(mahler_measure(IntPoly{1, 0, 0, 0, 0, 1}).value == doctest::Approx(1.0));
    CHECK(mahler_measure(IntPoly{0, 0, 0, 1}).value == doctest::Approx(1.0));     // x^3
    CHECK(mahler_measure(IntPoly{-7}).value == doctest::Approx(7.0));
}

TEST_CASE("linear closed form |a| max(1, |b/a|)") {
    CHECK(mahler_measure(IntPoly{-3, 2}).value == doctest::Approx(3.0));
    CHECK(mahler_measure(IntPoly{1, 5}).value == doctest::Approx(5.0));
    CHECK(mahler_measure(IntPoly{-2, 1}).value == doctest::Approx(2.0));
}

TEST_CASE("multiplicativity M(fg) = M(f) M(g)") {
    CounterRng rng(31);
    for (int t = 0; t < 60; ++t) {
        std::vector<mpz_class> ca(2 + rng.below(3)), cb(2 + rng.below(3));
        for (auto& v : ca) v = long(rng.below(9)) - 4;
        for (auto& v : cb) v = long(rng.below(9)) - 4;
        ca.back() = 1 + long(rng.below(3));
        cb.back() = 1 + long(rng.below(3));
        const IntPoly a{std::vector<mpz_class>(ca)}, b{std::vector<mpz_class>(cb)};
        const double lhs = mahler_measure(a * b).value;
        const double rhs = mahler_measure(a).value * mahler_measure(b).value;
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-7));
    }
}

TEST_CASE("repeated factors: M(P^k) = M(P)^k via the squarefree split") {
    const IntPoly p{-1, -1, 1};
    const IntPoly sq = p * p;
    const IntPoly cube = sq * p;
    const double m = mahler_measure(p).value;
    CHECK(mahler_measure(sq).value == doctest::Approx(m * m).epsilon(1e-9));
    CHECK(mahler_measure(cube).value == doctest::Approx(m * m * m).epsilon(1e-9));
}

TEST_CASE("content scales the measure") {
    const double m = mahler_measure(IntPoly{-1, -1, 1}).value;
    CHECK(mahler_measure(IntPoly{-6, -6, 6}).value == doctest::Approx(6 * m).epsilon(1e-9));
}

TEST_CASE("Lehmer-scale values bracket correctly") {
    // plastic constant root of x^3 - x - 1, smallest Pisot number 1.3247...
    CHECK(mahler_measure(IntPoly{-1, -1, 0, 1}).value ==
          doctest::Approx(1.3247179572447460).epsilon(1e-9));
    // x^3 - x^2 + 1 has the same measure (reciprocal-negation relative)
    CHECK(mahler_measure(IntPoly{1, 0, -1, 1}).value ==
          doctest::Approx(1.3247179572447460).epsilon(1e-9));
}

TEST_CASE("degree cap and zero input are rejected") {
    std::vector<mpz_class> big(18, 1);
    CHECK_THROWS_AS(mahler_measure(IntPoly(std::move(big))), std::invalid_argument);
    CHECK_THROWS_AS(mahler_measure(IntPoly::zero()), std::invalid_argument);
}
