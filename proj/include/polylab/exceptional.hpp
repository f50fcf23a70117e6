#pragma once

#include <cstdint>
#include <vector>

#include "polylab/intpoly.hpp"
#include "polylab/modarith.hpp"

namespace polylab {

// All primitive integer polynomials of degree 1..l with positive leading
// coefficient and Mahler measure at most q^(1/(l+1)^2), together with the set
// of their roots in F_q.  Coefficients are confined a priori to the box
// |c_j| <= binom(l, floor(l/2)) * measure_bound, which the coefficient-measure
// inequality makes exhaustive.
struct ExceptionalCatalog {
    int l = 0;
    uint64_t q = 0;
    long double measure_bound = 0;  // q^(1/(l+1)^2)
    int64_t coeff_box = 0;
    std::vector<IntPoly> polys;             // sorted by (degree, coefficient lex)
    std::vector<int32_t> residue_witness;   // size q; first vanishing poly or -1

    bool is_exceptional(uint64_t a) const { return residue_witness[a % q] >= 0; }
    size_t residue_count() const;
    double growth_constant() const;  // |polys| / q^(1/(l+1))
};

// Budget: (2*coeff_box+1)^(l+1) <= 10^9 candidate tuples, else budget_error.
// Mahler threshold carries a 1+1e-9 guard band; borderline measures are
// re-evaluated at root tolerance 1e-15 before accept/reject.
ExceptionalCatalog enumerate_exceptional(int l, Prime q);

bool is_exceptional_residue(uint64_t a, const ExceptionalCatalog& catalog);

// Small-coefficient pair with a common double root at a mod q:
// p1 = sum_j alpha_j x^j (degree exactly l) and p2 = sum_j beta_j x^(r j)
// (degree exactly r*l), all |alpha_j|, |beta_j| < q^(2/(l+1)).
struct WitnessPair {
    bool found = false;
    IntPoly p1;
    IntPoly p2;
};

WitnessPair find_double_root_witnesses(uint64_t a, Prime q, int l, uint64_t r);

}  // namespace polylab
