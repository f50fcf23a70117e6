#include "polylab/exceptional.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "polylab/common.hpp"
#include "polylab/mahler.hpp"
#include "polylab/modpoly.hpp"

namespace polylab {

namespace {

uint64_t binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * uint64_t(n - k + i) / uint64_t(i);
    return r;
}

constexpr long double kGuardBand = 1e-9L;

bool measure_within(const IntPoly& p, long double bound) {
    auto m = mahler_measure(p);
    long double hi = bound * (1 + kGuardBand);
    long double margin = bound * kGuardBand + m.error_bound;
    if (fabsl((long double)m.value - bound) <= margin) {
        auto tight = mahler_measure(p, 1e-15);
        return tight.value <= double(hi);
    }
    return m.value <= double(hi);
}

bool poly_less(const IntPoly& a, const IntPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    const auto& ca = a.coeffs();
    const auto& cb = b.coeffs();
    for (size_t i = 0; i < ca.size(); ++i)
        if (ca[i] != cb[i]) return ca[i] < cb[i];
    return false;
}

int64_t reduce_signed(int64_t v, uint64_t q) {
    int64_t r = v % int64_t(q);
    return r < 0 ? r + int64_t(q) : r;
}

}  // namespace

size_t ExceptionalCatalog::residue_count() const {
    size_t n = 0;
    for (int32_t w : residue_witness)
        if (w >= 0) ++n;
    return n;
}

double ExceptionalCatalog::growth_constant() const {
    return double(polys.size()) / std::pow(double(q), 1.0 / (l + 1));
}

ExceptionalCatalog enumerate_exceptional(int l, Prime q) {
    if (l < 3) throw std::invalid_argument("enumerate_exceptional: l >= 3 required");
    if (q.value > (uint64_t(1) << 26))
        throw budget_error("enumerate_exceptional: residue table for q > 2^26");

    ExceptionalCatalog cat;
    cat.l = l;
    cat.q = q.value;
    cat.measure_bound = powl((long double)q.value, 1.0L / ((l + 1) * (l + 1)));
    cat.coeff_box = int64_t(floorl(binom(l, l / 2) * cat.measure_bound));
    if (powl(2.0L * cat.coeff_box + 1, l + 1) > 1e9L)
        throw budget_error("enumerate_exceptional: coefficient box exceeds 10^9 tuples");

    const long double tau_hi = cat.measure_bound * (1 + kGuardBand);
    for (int dd = 1; dd <= l; ++dd) {
        // |c_j| <= binom(dd, j) * M for any degree-dd poly of measure M
        std::vector<int64_t> jbound(size_t(dd) + 1);
        for (int j = 0; j <= dd; ++j)
            jbound[size_t(j)] =
                std::min<int64_t>(cat.coeff_box, int64_t(floorl(binom(dd, j) * tau_hi)));

        std::vector<int64_t> c(size_t(dd) + 1);
        auto rec = [&](auto&& self, int j) -> void {
            if (j < 0) {
                std::vector<mpz_class> v(c.size());
                for (size_t i = 0; i < c.size(); ++i) v[i] = long(c[i]);
                IntPoly p(std::move(v));
                if (p.content() != 1) return;
                if (measure_within(p, cat.measure_bound)) cat.polys.push_back(p);
                return;
            }
            int64_t lo = (j == dd) ? 1 : -jbound[size_t(j)];
            for (c[size_t(j)] = lo; c[size_t(j)] <= jbound[size_t(j)]; ++c[size_t(j)])
                self(self, j - 1);
        };
        rec(rec, dd);
    }
    std::sort(cat.polys.begin(), cat.polys.end(), poly_less);

    cat.residue_witness.assign(q.value, -1);
    for (size_t idx = 0; idx < cat.polys.size(); ++idx) {
        ModPoly pm = ModPoly::reduce(cat.polys[idx], q.value);
        for (uint64_t a = 0; a < q.value; ++a)
            if (pm.eval(a) == 0 && cat.residue_witness[a] < 0)
                cat.residue_witness[a] = int32_t(idx);
    }
    return cat;
}

bool is_exceptional_residue(uint64_t a, const ExceptionalCatalog& catalog) {
    return catalog.is_exceptional(a);
}

namespace {

// Exhaustive lexicographic search over coefficient tuples in [-box, box] with
// nonzero leading coefficient.  The two congruences P(a) = P'(a) = 0 mod q fix
// the coefficients at positions pos1 > pos0 once the rest are chosen, so only
// in-box representatives of those residues are tried; the scan still visits
// every solution the full box contains.
struct DoubleRootSolver {
    uint64_t q;
    uint64_t a;
    int64_t box;
    std::vector<uint64_t> expn;  // exponent of x for each coefficient slot

    // returns coefficients c[0..l] with sum c_j x^(expn_j) having a double
    // root at a; empty if none in the box
    std::vector<int64_t> run() {
        const size_t l = expn.size() - 1;
        std::vector<int64_t> c(l + 1, 0);
        // value and derivative contributions of slot j per unit coefficient
        val.resize(l + 1);
        der.resize(l + 1);
        for (size_t j = 0; j <= l; ++j) {
            uint64_t e = expn[j];
            val[j] = powmod(a % q, e, q);
            der[j] = e == 0 ? 0 : mulmod(e % q, powmod(a % q, e - 1, q), q);
        }
        if (search(c, l)) return c;
        return {};
    }

    std::vector<uint64_t> val, der;

    bool solvable_slot(size_t j) const { return der[j] % q != 0; }

    bool search(std::vector<int64_t>& c, size_t j) {
        // slots l..2 are free; slots 1 and 0 are solved
        if (j == 1) return solve_tail(c);
        for (int64_t v = -box; v <= box; ++v) {
            if (j == c.size() - 1 && v == 0) continue;  // degree is exactly l
            c[j] = v;
            if (search(c, j - 1)) return true;
        }
        return false;
    }

    bool solve_tail(std::vector<int64_t>& c) {
        // derivative congruence fixes c[1] when its derivative weight is a
        // unit; otherwise c[1] ranges freely and the congruence is a filter
        int64_t sum_d = 0;
        for (size_t j = 2; j < c.size(); ++j)
            sum_d = (sum_d + int64_t(mulmod(uint64_t(reduce_signed(c[j], q)), der[j], q))) %
                    int64_t(q);
        if (solvable_slot(1)) {
            uint64_t inv = invmod(der[1], q);
            uint64_t rho = mulmod(uint64_t(reduce_signed(-sum_d, q)), inv, q);
            for (int64_t cand : {int64_t(rho) - int64_t(q), int64_t(rho)}) {
                if (cand < -box || cand > box) continue;
                c[1] = cand;
                if (solve_const(c)) return true;
            }
            return false;
        }
        for (int64_t v = -box; v <= box; ++v) {
            c[1] = v;
            int64_t d = (sum_d + int64_t(mulmod(uint64_t(reduce_signed(v, q)), der[1], q))) %
                        int64_t(q);
            if (d != 0) continue;
            if (solve_const(c)) return true;
        }
        return false;
    }

    bool solve_const(std::vector<int64_t>& c) {
        int64_t sum_v = 0;
        for (size_t j = 1; j < c.size(); ++j)
            sum_v = (sum_v + int64_t(mulmod(uint64_t(reduce_signed(c[j], q)), val[j], q))) %
                    int64_t(q);
        // val[0] = a^0 = 1 always, so c[0] is determined mod q
        uint64_t rho = uint64_t(reduce_signed(-sum_v, q));
        for (int64_t cand : {int64_t(rho) - int64_t(q), int64_t(rho)}) {
            if (cand < -box || cand > box) continue;
            c[0] = cand;
            // derivative contribution of the constant slot is zero, so the
            // derivative congruence is untouched
            return true;
        }
        return false;
    }
};

IntPoly poly_from_slots(const std::vector<int64_t>& c, const std::vector<uint64_t>& expn) {
    IntPoly p;
    for (size_t j = 0; j < c.size(); ++j)
        p = p + IntPoly::monomial(mpz_class(long(c[j])), size_t(expn[j]));
    return p;
}

}  // namespace

WitnessPair find_double_root_witnesses(uint64_t a, Prime q, int l, uint64_t r) {
    if (l < 2) throw std::invalid_argument("find_double_root_witnesses: l >= 2 required");
    if (!is_prime(r) || r <= uint64_t(l) * uint64_t(l))
        throw std::invalid_argument("find_double_root_witnesses: r must be a prime > l^2");
    a %= q.value;

    const long double bw = powl((long double)q.value, 2.0L / (l + 1));
    const int64_t box = int64_t(ceill(bw)) - 1;
    if (powl(2.0L * box + 1, l + 1) > 2e9L)
        throw budget_error("find_double_root_witnesses: coefficient box too large");

    WitnessPair out;
    std::vector<uint64_t> e1(size_t(l) + 1), e2(size_t(l) + 1);
    for (int j = 0; j <= l; ++j) {
        e1[size_t(j)] = uint64_t(j);
        e2[size_t(j)] = uint64_t(j) * r;
    }
    DoubleRootSolver s1{q.value, a, box, e1, {}, {}};
    auto c1 = s1.run();
    DoubleRootSolver s2{q.value, a, box, e2, {}, {}};
    auto c2 = s2.run();
    if (c1.empty() || c2.empty()) return out;
    out.found = true;
    out.p1 = poly_from_slots(c1, e1);
    out.p2 = poly_from_slots(c2, e2);
    return out;
}

}  // namespace polylab
