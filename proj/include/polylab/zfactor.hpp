#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "polylab/intpoly.hpp"

namespace polylab {

struct FactorizationZ {
    mpz_class content;  // signed; product of factors^mult times content gives back P
    std::vector<std::pair<IntPoly, int>> factors;  // primitive, irreducible, lc > 0

    int distinct_irreducible_count() const { return int(factors.size()); }
    bool has_repeated_factor() const {
        for (const auto& f : factors)
            if (f.second > 1) return true;
        return false;
    }
};

inline constexpr uint64_t kDefaultFactorBudget = 50'000'000;

// Complete factorization over Z by rational-root extraction plus divisor
// interpolation (Kronecker) for higher-degree factors.  Limits: degree <= 10
// and |coefficients| <= 10^6; the interpolation search is capped by `budget`
// DFS steps.
FactorizationZ factor_over_Z_small(const IntPoly& p,
                                   uint64_t budget = kDefaultFactorBudget);

}  // namespace polylab
