#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "polylab/intpoly.hpp"
#include "polylab/modarith.hpp"

namespace polylab {

enum class ModelKind { multiplicative, squarefree, fekete, iid };

// Sign-sequence generators.  The two multiplicative models pin X_1 = +1 and
// derive prime signs from a keyed hash of (seed, p), so X_p never depends on
// the order primes are visited.  Descriptor strings: "mult:SEED",
// "sqfree:SEED", "fekete:P", "iid:SEED".
struct CoefficientModel {
    ModelKind kind = ModelKind::multiplicative;
    uint64_t seed = 0;   // ignored for fekete
    uint64_t prime = 0;  // fekete only, odd prime

    static CoefficientModel parse(const std::string& descriptor);
    std::string descriptor() const;

    // X_1..X_n, entries in {-1, 0, +1}; element i-1 holds X_i.
    // fekete requires prime > n.
    std::vector<int> draw_sequence(uint64_t n) const;

    int prime_sign(uint64_t p) const;  // multiplicative/squarefree models
};

// R(x) = X_1 + X_2 x + ... + X_{d+1} x^d from a length-(d+1) sequence.
IntPoly build_R(const std::vector<int>& signs);
IntPoly build_R(const CoefficientModel& m, int degree);

// Sum_{a=1}^{d} (a|p) x^(a-1); degree d-1, requires p > d.
IntPoly build_fekete(int d, Prime p);

}  // namespace polylab
