#include "polylab/mahler.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace polylab {

namespace {

using cld = std::complex<long double>;

// One Aberth-Ehrlich attempt from a perturbed-circle start.
bool aberth_attempt(const std::vector<long double>& c, long double phase,
                    double tol, int max_iter, RootSet& out) {
    const int d = int(c.size()) - 1;
    long double cmax = 0;
    for (int i = 0; i < d; ++i) cmax = std::max(cmax, fabsl(c[size_t(i)]));
    const long double radius = 1.0L + cmax / fabsl(c[size_t(d)]);

    std::vector<cld> z(static_cast<size_t>(d));
    for (int k = 0; k < d; ++k) {
        long double th = 2.0L * M_PIl * (k + 0.353L) / d + phase;
        z[size_t(k)] = cld(radius * cosl(th), radius * sinl(th));
    }

    std::vector<cld> w(static_cast<size_t>(d));
    for (int iter = 1; iter <= max_iter; ++iter) {
        long double werr = 0;
        bool all_small = true;
        for (int i = 0; i < d; ++i) {
            // p and p' by Horner
            cld p = c[size_t(d)], dp = 0;
            for (int k = d - 1; k >= 0; --k) {
                dp = dp * z[size_t(i)] + p;
                p = p * z[size_t(i)] + c[size_t(k)];
            }
            if (p == cld(0)) {
                w[size_t(i)] = 0;
                continue;
            }
            if (dp == cld(0)) {
                w[size_t(i)] = cld(1e-3L, 1e-3L);  // nudge off a critical point
                all_small = false;
                continue;
            }
            cld nw = p / dp;
            cld s = 0;
            for (int j = 0; j < d; ++j)
                if (j != i) s += 1.0L / (z[size_t(i)] - z[size_t(j)]);
            cld denom = 1.0L - nw * s;
            w[size_t(i)] = (denom == cld(0)) ? nw : nw / denom;
            long double e = d * std::abs(nw);
            werr = std::max(werr, e);
            if (e > tol * std::max(1.0L, std::abs(z[size_t(i)]))) all_small = false;
        }
        for (int i = 0; i < d; ++i) z[size_t(i)] -= w[size_t(i)];
        if (all_small) {
            out.roots.assign(z.begin(), z.end());
            out.max_err = werr;
            out.iterations = iter;
            return true;
        }
    }
    return false;
}

}  // namespace

RootSet complex_roots(const IntPoly& p, double tol, int max_iter) {
    if (p.is_zero()) throw std::invalid_argument("complex_roots: zero polynomial");
    size_t t = 0;  // roots at the origin
    while (p.coeff(t) == 0) ++t;
    const int d = p.degree() - int(t);
    RootSet out;
    out.max_err = 0;
    out.iterations = 0;
    if (d >= 1) {
        std::vector<long double> c(size_t(d) + 1);
        for (int i = 0; i <= d; ++i) c[size_t(i)] = mpz_get_d(p.coeff(t + size_t(i)).get_mpz_t());
        if (d == 1) {
            out.roots.push_back(cld(-c[0] / c[1], 0.0L));
        } else {
            bool ok = false;
            for (int attempt = 0; attempt < 3 && !ok; ++attempt)
                ok = aberth_attempt(c, 0.29L * attempt, tol, max_iter, out);
            if (!ok)
                throw convergence_error("complex_roots: no convergence for " + p.str());
        }
    }
    for (size_t i = 0; i < t; ++i) out.roots.push_back(cld(0, 0));
    return out;
}

namespace {

// Yun decomposition of a primitive polynomial into squarefree factors with
// multiplicities.
std::vector<std::pair<IntPoly, int>> squarefree_split(const IntPoly& p) {
    std::vector<std::pair<IntPoly, int>> out;
    IntPoly A = IntPoly::gcd(p, p.derivative());
    if (A.degree() == 0) {
        out.emplace_back(p, 1);
        return out;
    }
    IntPoly B, C;
    bool ok = p.try_divide(A, B) && p.derivative().try_divide(A, C);
    assert(ok);
    (void)ok;
    IntPoly D = C - B.derivative();
    for (int i = 1; B.degree() > 0; ++i) {
        IntPoly g = IntPoly::gcd(B, D);
        if (g.is_zero()) g = IntPoly{1};
        IntPoly Bn, Cn;
        ok = B.try_divide(g, Bn) && D.try_divide(g, Cn);
        assert(ok);
        if (g.degree() > 0) out.emplace_back(g, i);
        B = Bn;
        D = Cn - Bn.derivative();
    }
    return out;
}

}  // namespace

MahlerResult mahler_measure(const IntPoly& p, double tol) {
    if (p.is_zero()) throw std::invalid_argument("mahler_measure: zero polynomial");
    if (p.degree() > 16) throw std::invalid_argument("mahler_measure: degree cap is 16");
    mpz_class cont = p.content();
    if (p.degree() == 0)
        return MahlerResult{std::abs(mpz_get_d(p.coeff(0).get_mpz_t())), 0.0};

    long double value = fabsl(mpz_get_d(cont.get_mpz_t()));
    long double rel_err = 0;
    for (const auto& [g, mult] : squarefree_split(p.primitive_part())) {
        RootSet rs = complex_roots(g, tol);
        long double m = fabsl(mpz_get_d(g.lc().get_mpz_t()));
        long double errsum = 0;
        for (const auto& z : rs.roots) {
            long double az = std::abs(z);
            if (az > 1.0L) m *= az;
            errsum += rs.max_err;
        }
        value *= powl(m, mult);
        rel_err += mult * errsum;
    }
    double v = double(value);
    return MahlerResult{v, double(value * rel_err) + 4e-16 * v};
}

}  // namespace polylab
