#pragma once

#include <cstdint>
#include <vector>

#include "polylab/intpoly.hpp"
#include "polylab/modarith.hpp"

namespace polylab {

// Dense polynomial over F_q, q an odd word-sized prime (q = 2 also works for
// the elementary operations).  Coefficients live in [0, q).
class ModPoly {
public:
    ModPoly() : q_(2) {}
    ModPoly(uint64_t q, std::vector<uint64_t> coeffs);
    static ModPoly reduce(const IntPoly& p, uint64_t q);
    static ModPoly x(uint64_t q) { return ModPoly(q, {0, 1}); }
    static ModPoly one(uint64_t q) { return ModPoly(q, {1}); }

    uint64_t q() const { return q_; }
    int degree() const { return int(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    uint64_t coeff(size_t i) const { return i < c_.size() ? c_[i] : 0; }
    const std::vector<uint64_t>& coeffs() const { return c_; }
    bool operator==(const ModPoly& o) const { return q_ == o.q_ && c_ == o.c_; }

    ModPoly operator+(const ModPoly& o) const;
    ModPoly operator-(const ModPoly& o) const;
    ModPoly operator*(const ModPoly& o) const;
    ModPoly derivative() const;
    ModPoly monic() const;  // divide by leading coefficient
    uint64_t eval(uint64_t a) const;

    // remainder of *this by monic divisor d
    ModPoly rem(const ModPoly& d) const;

    static ModPoly gcd(ModPoly a, ModPoly b);  // monic, or zero

    // this^e mod m (m monic, deg m >= 1)
    ModPoly powmod_poly(uint64_t e, const ModPoly& m) const;

private:
    void trim();
    uint64_t q_;
    std::vector<uint64_t> c_;
};

// Number of distinct roots of P in F_q, via deg gcd(x^q - x, P mod q).
// Throws zero_reduction_error if q divides every coefficient of P.
int distinct_root_count(const IntPoly& p, Prime q);

// Number of distinct a in F_q with P(a) = P'(a) = 0, i.e. roots of
// multiplicity >= 2 of P mod q.
int double_root_count(const IntPoly& p, Prime q);

// True iff P mod q is irreducible of full degree.  Requires the leading
// coefficient of P to survive reduction.  Standard Frobenius-chain test:
// no factors of degree <= deg/2, then x^(q^deg) = x.
bool irreducible_mod_q(const IntPoly& p, Prime q);

}  // namespace polylab
