#include "polylab/modpoly.hpp"

#include <algorithm>

namespace polylab {

ModPoly::ModPoly(uint64_t q, std::vector<uint64_t> coeffs) : q_(q), c_(std::move(coeffs)) {
    for (auto& c : c_) c %= q_;
    trim();
}

void ModPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

ModPoly ModPoly::reduce(const IntPoly& p, uint64_t q) {
    std::vector<uint64_t> v(size_t(p.degree() + 1));
    for (size_t i = 0; i < v.size(); ++i)
        v[i] = mpz_fdiv_ui(p.coeff(i).get_mpz_t(), q);
    return ModPoly(q, std::move(v));
}

ModPoly ModPoly::operator+(const ModPoly& o) const {
    std::vector<uint64_t> v(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < v.size(); ++i) v[i] = addmod(coeff(i), o.coeff(i), q_);
    return ModPoly(q_, std::move(v));
}

ModPoly ModPoly::operator-(const ModPoly& o) const {
    std::vector<uint64_t> v(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < v.size(); ++i) v[i] = submod(coeff(i), o.coeff(i), q_);
    return ModPoly(q_, std::move(v));
}

ModPoly ModPoly::operator*(const ModPoly& o) const {
    if (c_.empty() || o.c_.empty()) return ModPoly(q_, {});
    std::vector<uint64_t> v(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j)
            v[i + j] = addmod(v[i + j], mulmod(c_[i], o.c_[j], q_), q_);
    }
    return ModPoly(q_, std::move(v));
}

ModPoly ModPoly::derivative() const {
    if (c_.size() <= 1) return ModPoly(q_, {});
    std::vector<uint64_t> v(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = mulmod(c_[i], i % q_, q_);
    return ModPoly(q_, std::move(v));
}

ModPoly ModPoly::monic() const {
    if (c_.empty() || c_.back() == 1) return *this;
    uint64_t inv = invmod(c_.back(), q_);
    std::vector<uint64_t> v(c_);
    for (auto& c : v) c = mulmod(c, inv, q_);
    return ModPoly(q_, std::move(v));
}

uint64_t ModPoly::eval(uint64_t a) const {
    uint64_t r = 0;
    a %= q_;
    for (size_t i = c_.size(); i-- > 0;) r = addmod(mulmod(r, a, q_), c_[i], q_);
    return r;
}

ModPoly ModPoly::rem(const ModPoly& d) const {
    // d monic
    if (degree() < d.degree()) return *this;
    std::vector<uint64_t> r(c_);
    const int dd = d.degree();
    for (int k = int(r.size()) - 1; k >= dd; --k) {
        uint64_t t = r[size_t(k)];
        if (t == 0) continue;
        r[size_t(k)] = 0;
        for (int i = 0; i < dd; ++i)
            r[size_t(k - dd + i)] = submod(r[size_t(k - dd + i)], mulmod(t, d.c_[size_t(i)], q_), q_);
    }
    r.resize(size_t(dd));
    return ModPoly(q_, std::move(r));
}

ModPoly ModPoly::gcd(ModPoly a, ModPoly b) {
    while (!b.is_zero()) {
        b = b.monic();
        ModPoly r = a.rem(b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

ModPoly ModPoly::powmod_poly(uint64_t e, const ModPoly& m) const {
    ModPoly result = ModPoly::one(q_);
    ModPoly base = rem(m);
    while (e) {
        if (e & 1) result = (result * base).rem(m);
        base = (base * base).rem(m);
        e >>= 1;
    }
    return result;
}

namespace {

ModPoly reduced_nonzero(const IntPoly& p, uint64_t q) {
    ModPoly pq = ModPoly::reduce(p, q);
    if (pq.is_zero())
        throw zero_reduction_error("polynomial vanishes mod " + std::to_string(q));
    return pq;
}

int distinct_root_count_mod(const ModPoly& pq) {
    const uint64_t q = pq.q();
    if (pq.degree() <= 0) return 0;
    if (pq.degree() == 1) return 1;
    ModPoly m = pq.monic();
    ModPoly h = ModPoly::x(q).powmod_poly(q, m);  // x^q mod P
    h = h - ModPoly::x(q);
    ModPoly g = ModPoly::gcd(h.rem(m), m);
    return std::max(g.degree(), 0);
}

}  // namespace

int distinct_root_count(const IntPoly& p, Prime q) {
    return distinct_root_count_mod(reduced_nonzero(p, q.value));
}

int double_root_count(const IntPoly& p, Prime q) {
    ModPoly pq = reduced_nonzero(p, q.value);
    ModPoly g = ModPoly::gcd(pq, pq.derivative());
    if (g.degree() <= 0) return 0;
    return distinct_root_count_mod(g);
}

bool irreducible_mod_q(const IntPoly& p, Prime q) {
    if (p.degree() < 1) throw std::invalid_argument("irreducible_mod_q: degree must be >= 1");
    ModPoly pq = ModPoly::reduce(p, q.value);
    if (pq.degree() != p.degree())
        throw std::domain_error("irreducible_mod_q: leading coefficient vanishes mod q");
    const int d = pq.degree();
    if (d == 1) return true;
    ModPoly m = pq.monic();
    const ModPoly x = ModPoly::x(q.value);
    // F_k = x^(q^k) mod P; a factor of degree t <= d/2 shows up as a
    // nontrivial gcd at level k = t, so reducibility is detected early.
    ModPoly f = x;
    for (int k = 1; k <= d; ++k) {
        f = f.powmod_poly(q.value, m);
        if (k <= d / 2) {
            ModPoly g = ModPoly::gcd((f - x).rem(m), m);
            if (g.degree() != 0) return false;
        }
    }
    return f == x;  // x^(q^d) = x closes the Frobenius orbit at full degree
}

}  // namespace polylab
