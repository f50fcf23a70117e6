#include <algorithm>
#include <cmath>
#include <cstdint>

#include "doctest.h"
#include "polylab/common.hpp"
#include "polylab/exceptional.hpp"
#include "polylab/mahler.hpp"
#include "polylab/modpoly.hpp"

using namespace polylab;

namespace {

bool catalog_order(const IntPoly& a, const IntPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.coeffs() < b.coeffs();
}

}  // namespace

TEST_CASE("catalog at l = 3, q = 101: frozen residue set and witnesses") {
    const ExceptionalCatalog cat = enumerate_exceptional(3, Prime(101));
    CHECK(cat.l == 3);
    CHECK(cat.q == 101);
    CHECK(double(cat.measure_bound) ==
          doctest::Approx(std::pow(101.0, 1.0 / 16)).epsilon(1e-12));

    CHECK(cat.residue_count() == 17);
    CHECK(cat.is_exceptional(0));
    CHECK(cat.is_exceptional(1));
    CHECK(cat.is_exceptional(100));
    CHECK(is_exceptional_residue(100, cat));
    CHECK(is_exceptional_residue(201, cat));  // reduced mod q
    CHECK(!cat.is_exceptional(2));            // x - 2 has measure 2 > 101^(1/16)

    // witnesses are the first vanishing polynomial in catalog order; for the
    // root residues 0, 1, -1 those are x, x - 1, x + 1
    CHECK(cat.polys[size_t(cat.residue_witness[0])] == IntPoly{0, 1});
    CHECK(cat.polys[size_t(cat.residue_witness[1])] == IntPoly{-1, 1});
    CHECK(cat.polys[size_t(cat.residue_witness[100])] == IntPoly{1, 1});

    // only measure-1 linear polynomials fit under 101^(1/16) ~ 1.334
    const long n1 = std::count_if(cat.polys.begin(), cat.polys.end(),
                                  [](const IntPoly& p) { return p.degree() == 1; });
    CHECK(n1 == 3);
    CHECK(std::find(cat.polys.begin(), cat.polys.end(), IntPoly{-2, 1}) == cat.polys.end());
    CHECK(std::find(cat.polys.begin(), cat.polys.end(), IntPoly{1, 2}) == cat.polys.end());

    CHECK(std::is_sorted(cat.polys.begin(), cat.polys.end(), catalog_order));
    CHECK(std::adjacent_find(cat.polys.begin(), cat.polys.end()) == cat.polys.end());

    for (const IntPoly& p : cat.polys) {
        REQUIRE(p.degree() >= 1);
        REQUIRE(p.degree() <= 3);
        CHECK(p.content() == 1);
        CHECK(p.lc() > 0);
        CHECK(mahler_measure(p).value <= double(cat.measure_bound) * (1 + 1e-6));
    }
    CHECK(cat.growth_constant() ==
          doctest::Approx(double(cat.polys.size()) / std::pow(101.0, 0.25)));
}

TEST_CASE("measure threshold straddles x - 2 between q = 65521 and q = 65537") {
    // 2^16 = 65536: the bound q^(1/16) crosses 2 exactly between these primes
    const ExceptionalCatalog below = enumerate_exceptional(3, Prime(65521));
    CHECK(!below.is_exceptional(2));
    const ExceptionalCatalog above = enumerate_exceptional(3, Prime(65537));
    CHECK(above.is_exceptional(2));
    CHECK(above.polys.size() > below.polys.size());
}

TEST_CASE("enumeration guards") {
    CHECK_THROWS_AS(enumerate_exceptional(2, Prime(101)), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_exceptional(9, Prime(101)), budget_error);  // box^10 tuples
    uint64_t big = (uint64_t(1) << 26) + 1;
    while (!is_prime(big)) ++big;
    CHECK_THROWS_AS(enumerate_exceptional(3, Prime(big)), budget_error);
}

TEST_CASE("double-root witness pair at a = 1, q = 101") {
    const Prime q(101);
    const WitnessPair w = find_double_root_witnesses(1, q, 3, 11);
    REQUIRE(w.found);
    CHECK(w.p1.degree() == 3);
    CHECK(w.p2.degree() == 33);

    const double box = std::pow(101.0, 2.0 / 4);
    CHECK(double(w.p1.max_abs_coeff().get_d()) < box);
    CHECK(double(w.p2.max_abs_coeff().get_d()) < box);
    for (size_t j = 0; j <= 33; ++j)
        if (j % 11 != 0) CHECK(w.p2.coeff(j) == 0);

    for (const IntPoly* p : {&w.p1, &w.p2}) {
        CHECK(ModPoly::reduce(*p, q.value).eval(1) == 0);
        CHECK(ModPoly::reduce(p->derivative(), q.value).eval(1) == 0);
    }
}

TEST_CASE("double-root witness guards") {
    CHECK_THROWS_AS(find_double_root_witnesses(1, Prime(101), 1, 11),
                    std::invalid_argument);
    CHECK_THROWS_AS(find_double_root_witnesses(1, Prime(101), 3, 9),
                    std::invalid_argument);  // 9 is composite
    CHECK_THROWS_AS(find_double_root_witnesses(1, Prime(101), 3, 7),
                    std::invalid_argument);  // 7 <= l^2
    CHECK_THROWS_AS(find_double_root_witnesses(1, Prime(65521), 3, 11), budget_error);
}
