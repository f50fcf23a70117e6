#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <vector>

#include "polylab/common.hpp"

namespace polylab {

// Dense integer polynomial, coefficient of x^i at index i.  Normalized so
// the coefficient vector carries no leading zeros; the zero polynomial has
// an empty vector and degree -1.
class IntPoly {
public:
    IntPoly() = default;
    IntPoly(std::initializer_list<long> coeffs);
    explicit IntPoly(std::vector<mpz_class> coeffs);

    // Comma-separated, constant term first: "1,0,1" is x^2 + 1.
    static IntPoly parse(const std::string& text);
    std::string str() const;

    static IntPoly zero() { return IntPoly(); }
    static IntPoly monomial(const mpz_class& c, size_t k);

    int degree() const { return int(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const mpz_class& coeff(size_t i) const;
    const mpz_class& lc() const;
    const std::vector<mpz_class>& coeffs() const { return c_; }

    bool operator==(const IntPoly& o) const { return c_ == o.c_; }

    IntPoly operator-() const;
    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly shifted(size_t k) const;  // multiply by x^k

    IntPoly derivative() const;
    mpz_class eval(const mpz_class& x) const;

    mpz_class content() const;        // nonnegative; 0 only for the zero poly
    IntPoly primitive_part() const;   // positive leading coefficient
    mpz_class max_abs_coeff() const;

    // Exact division test: if `d` divides *this over the integers, stores
    // the quotient and returns true.  `d` must be nonzero.
    bool try_divide(const IntPoly& d, IntPoly& quotient) const;

    // Subresultant-PRS based operations.
    static IntPoly gcd(const IntPoly& a, const IntPoly& b);  // primitive, lc > 0
    static mpz_class resultant(const IntPoly& a, const IntPoly& b);
    mpz_class discriminant() const;   // degree >= 1 required
    IntPoly squarefree_part() const;  // primitive with the same distinct roots

private:
    void trim();
    std::vector<mpz_class> c_;
};

}  // namespace polylab
