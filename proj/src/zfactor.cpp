#include "polylab/zfactor.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "polylab/modarith.hpp"

namespace polylab {

namespace {

std::vector<int64_t> sorted_divisors(const mpz_class& v) {
    mpz_class a = abs(v);
    if (!a.fits_ulong_p() || a.get_ui() > (uint64_t(1) << 40))
        throw budget_error("factor_over_Z_small: intermediate value too large to factor");
    auto fac = factorize_small(a.get_ui());
    std::vector<int64_t> divs{1};
    for (const auto& [p, e] : fac) {
        size_t old = divs.size();
        int64_t pe = 1;
        for (int i = 1; i <= e; ++i) {
            pe *= int64_t(p);
            for (size_t k = 0; k < old; ++k) divs.push_back(divs[k] * pe);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

struct KroneckerSearch {
    const IntPoly& W;
    uint64_t steps_left;

    std::vector<int64_t> nodes;
    std::vector<std::vector<int64_t>> cand;  // divisor candidates per node
    // rows[j][l] = divided difference f[x_(j-l) .. x_j] along the current path
    std::vector<std::vector<mpz_class>> rows;

    bool dfs(size_t j, IntPoly& out) {
        if (steps_left == 0)
            throw budget_error("factor_over_Z_small: interpolation budget exhausted");
        --steps_left;
        const size_t k1 = nodes.size();
        for (int64_t y : cand[j]) {
            auto& row = rows[j];
            row[0] = y;
            bool ok = true;
            for (size_t l = 1; l <= j; ++l) {
                mpz_class num = row[l - 1] - rows[j - 1][l - 1];
                int64_t dx = nodes[j] - nodes[j - l];
                if (!mpz_divisible_ui_p(num.get_mpz_t(), (unsigned long)std::abs(dx))) {
                    ok = false;
                    break;
                }
                row[l] = num / dx;
            }
            if (!ok) continue;
            if (j + 1 < k1) {
                if (dfs(j + 1, out)) return true;
                continue;
            }
            // full tuple: leading divided difference is the would-be leading
            // coefficient; it must be nonzero and divide lc(W)
            const mpz_class& top = row[j];
            if (top == 0 || !mpz_divisible_p(W.lc().get_mpz_t(), top.get_mpz_t())) continue;
            IntPoly g = interpolate();
            IntPoly q;
            if (g.degree() >= 1 && W.try_divide(g, q)) {
                out = g.lc() > 0 ? g : -g;
                return true;
            }
        }
        return false;
    }

    IntPoly interpolate() const {
        // Newton form with top-row differences f[x_0..x_l] = rows[l][l]
        IntPoly g;
        IntPoly basis{1};
        for (size_t l = 0; l < nodes.size(); ++l) {
            g = g + IntPoly(std::vector<mpz_class>{rows[l][l]}) * basis;
            basis = basis * IntPoly{-long(nodes[l]), 1};
        }
        return g;
    }
};

// one factor of degree in [2, deg/2], or nullopt if W has none
bool kronecker_factor(const IntPoly& W, uint64_t& budget, IntPoly& out) {
    const int d = W.degree();
    struct Node {
        int64_t x;
        mpz_class v;
    };
    std::vector<Node> pool;
    for (int64_t x : {0ll, 1ll, -1ll, 2ll, -2ll, 3ll, -3ll}) pool.push_back({x, W.eval(x)});
    std::sort(pool.begin(), pool.end(), [](const Node& a, const Node& b) {
        mpz_class aa = abs(a.v), ab = abs(b.v);
        if (aa != ab) return aa < ab;
        return a.x < b.x;
    });

    for (int k = 2; k <= d / 2; ++k) {
        KroneckerSearch s{W, budget, {}, {}, {}};
        for (int i = 0; i <= k; ++i) {
            const Node& n = pool[size_t(i)];
            s.nodes.push_back(n.x);
            assert(n.v != 0);  // rational roots were stripped first
            auto divs = sorted_divisors(n.v);
            std::vector<int64_t> c;
            if (i == 0) {
                c = divs;  // sign of g fixed by g(x_0) > 0
            } else {
                for (auto it = divs.rbegin(); it != divs.rend(); ++it) c.push_back(-*it);
                c.insert(c.end(), divs.begin(), divs.end());
            }
            s.cand.push_back(std::move(c));
            s.rows.emplace_back(size_t(i) + 1);
        }
        bool found = s.dfs(0, out);
        budget = s.steps_left;
        if (found) return true;
    }
    return false;
}

void extract_with_multiplicity(IntPoly& W, const IntPoly& g,
                               std::vector<std::pair<IntPoly, int>>& factors) {
    int mult = 0;
    IntPoly q;
    while (W.try_divide(g, q)) {
        W = q;
        ++mult;
    }
    assert(mult > 0);
    factors.emplace_back(g, mult);
}

void extract_linear_factors(IntPoly& W, std::vector<std::pair<IntPoly, int>>& factors) {
    for (;;) {
        if (W.degree() < 1) return;
        if (W.degree() == 1) {
            factors.emplace_back(W, 1);
            W = IntPoly{1};
            return;
        }
        bool hit = false;
        auto nums = sorted_divisors(W.coeff(0));
        auto dens = sorted_divisors(W.lc());
        for (int64_t den : dens) {
            for (int64_t n : nums) {
                for (int64_t num : {n, -n}) {
                    if (std::gcd(num, den) != 1) continue;
                    IntPoly g{-long(num), long(den)};
                    IntPoly q;
                    if (W.try_divide(g, q)) {
                        extract_with_multiplicity(W, g, factors);
                        hit = true;
                        break;
                    }
                }
                if (hit) break;
            }
            if (hit) break;
        }
        if (!hit) return;
    }
}

}  // namespace

FactorizationZ factor_over_Z_small(const IntPoly& p, uint64_t budget) {
    if (p.is_zero()) throw std::invalid_argument("factor_over_Z_small: zero polynomial");
    if (p.degree() > 10)
        throw std::invalid_argument("factor_over_Z_small: degree cap is 10");
    if (p.max_abs_coeff() > 1'000'000)
        throw std::invalid_argument("factor_over_Z_small: coefficient cap is 10^6");

    FactorizationZ out;
    mpz_class cont = p.content();
    if (p.lc() < 0) cont = -cont;
    out.content = cont;
    if (p.degree() == 0) return out;

    IntPoly W = p.primitive_part();

    size_t t = 0;
    while (W.coeff(t) == 0) ++t;
    if (t > 0) {
        out.factors.emplace_back(IntPoly{0, 1}, int(t));
        IntPoly q;
        bool ok = W.try_divide(IntPoly{0, 1}.shifted(t - 1), q);
        assert(ok);
        (void)ok;
        W = q;
    }

    extract_linear_factors(W, out.factors);

    while (W.degree() >= 2) {
        IntPoly g;
        if (W.degree() >= 4 && kronecker_factor(W, budget, g)) {
            extract_with_multiplicity(W, g, out.factors);
        } else {
            // no rational roots and no factor of degree <= deg/2
            out.factors.emplace_back(W, 1);
            W = IntPoly{1};
        }
    }

    std::sort(out.factors.begin(), out.factors.end(),
              [](const std::pair<IntPoly, int>& a, const std::pair<IntPoly, int>& b) {
                  if (a.first.degree() != b.first.degree())
                      return a.first.degree() < b.first.degree();
                  const auto& ca = a.first.coeffs();
                  const auto& cb = b.first.coeffs();
                  for (size_t i = 0; i < ca.size(); ++i)
                      if (ca[i] != cb[i]) return ca[i] < cb[i];
                  return false;
              });
    return out;
}

}  // namespace polylab
