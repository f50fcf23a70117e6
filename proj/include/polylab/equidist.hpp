#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "polylab/intpoly.hpp"
#include "polylab/modarith.hpp"

namespace polylab {

// Signed walk Y = sum_{i in I} X_i * (a^i, i a^{i-1}) over F_q^2 with uniform
// independent +-1 signs X_i.  The conventions 0 * 0^{-1} = 0 and 0^0 = 1 apply
// to every term evaluation.
struct WalkSpec {
    Prime q;
    uint64_t a = 0;
    std::vector<uint64_t> exponents;  // ascending, distinct
};

// (a^i mod q, i * a^(i-1) mod q)
std::pair<uint64_t, uint64_t> walk_term(Prime q, uint64_t a, uint64_t i);

// E exp(2 pi i xi.Y / q) = prod over i in I of cos(2 pi (xi1 a^i + xi2 i a^(i-1)) / q).
// Factors accumulate in log space once |I| > 10^4 to dodge underflow.
double fourier_coeff(const WalkSpec& w, uint64_t xi1, uint64_t xi2);

// max |fourier_coeff| over (xi1, xi2) != (0, 0)
double max_fourier_coeff(const WalkSpec& w);

struct WalkDistribution {
    uint64_t q = 0;
    std::vector<double> prob;  // index u*q + v
    double at(uint64_t u, uint64_t v) const { return prob[u * q + v]; }
};

// Exact distribution of Y by 2^|I| sign enumeration (Gray-code updates,
// |I| <= 24); the parallel version splits fixed high sign bits across
// threads and merges counts in block order.
WalkDistribution walk_distribution_bruteforce(const WalkSpec& w);
namespace ref {
WalkDistribution walk_distribution_bruteforce(const WalkSpec& w);
}

// Distribution recovered through P[Y=x] = q^{-2} sum_xi e(-xi.x/q) Yhat(xi).
WalkDistribution walk_distribution_fourier(const WalkSpec& w);

double total_variation(const WalkDistribution& a, const WalkDistribution& b);

// max_x P[sum_{ i in I } X_i a^i = x]: exact by sign enumeration (|I| <= 24)
double max_point_mass_1d(Prime q, uint64_t a, const std::vector<uint64_t>& exponents);

struct PointMassEstimate {
    double value = 0;
    double std_error = 0;
};
PointMassEstimate max_point_mass_1d_mc(Prime q, uint64_t a,
                                       const std::vector<uint64_t>& exponents,
                                       uint64_t samples, uint64_t seed);

// v reduced into (-q/2, q/2]
int64_t least_abs_residue(uint64_t v, Prime q);

// Whether |xi1 a^e + xi2 e a^(e-1)| < q^(1 - 2/(l+1)) / (l+1) in least absolute
// residues at every e = j*k + j0 for j = 0..l(r+1).  Requires l >= 3 and r a
// prime exceeding l^2.
bool lemma6_smallness_holds(Prime q, uint64_t a, uint64_t xi1, uint64_t xi2,
                            uint64_t k, uint64_t j0, int l, uint64_t r);

// (sum_j alpha_j a^(j+j0), sum_j alpha_j (j+j0) a^(j+j0-1)) mod q.  Both vanish
// for every j0 when a is a double root of sum_j alpha_j x^j mod q, which makes
// the full two-parameter recurrence hold for all (xi1, xi2).
std::pair<uint64_t, uint64_t> recurrence_component_sums(Prime q, uint64_t a,
                                                        const std::vector<uint64_t>& alpha,
                                                        uint64_t j0);

// True iff sum_j p_j x_(j+j0) = 0 for every window start j0 = 0..N-deg(p):
// membership of p in the annihilator set of the sequence.
bool lambda_membership(const std::vector<long long>& terms, const IntPoly& p);

// x_n = sum_j rec[j] * x_(n-1-j) for n >= |init|; caller keeps growth in
// long long range
std::vector<long long> recurrence_sequence(std::vector<long long> init,
                                           const std::vector<long long>& rec, size_t len);

}  // namespace polylab
