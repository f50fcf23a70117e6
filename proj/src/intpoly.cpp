#include "polylab/intpoly.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace polylab {

namespace {

const mpz_class kZero = 0;

mpz_class exact_div(const mpz_class& a, const mpz_class& b) {
    mpz_class q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    assert(r == 0);
    return q;
}

mpz_class pow_mpz(const mpz_class& a, unsigned long e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), a.get_mpz_t(), e);
    return r;
}

}  // namespace

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
    c_.reserve(coeffs.size());
    for (long v : coeffs) c_.emplace_back(v);
    trim();
}

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::parse(const std::string& text) {
    std::vector<mpz_class> coeffs;
    std::string tok;
    std::istringstream in(text);
    while (std::getline(in, tok, ',')) {
        size_t a = tok.find_first_not_of(" \t");
        size_t b = tok.find_last_not_of(" \t");
        if (a == std::string::npos)
            throw std::invalid_argument("IntPoly::parse: empty coefficient in '" + text + "'");
        try {
            coeffs.emplace_back(tok.substr(a, b - a + 1));
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("IntPoly::parse: bad coefficient '" + tok + "'");
        }
    }
    if (coeffs.empty()) throw std::invalid_argument("IntPoly::parse: no coefficients");
    return IntPoly(std::move(coeffs));
}

std::string IntPoly::str() const {
    if (c_.empty()) return "0";
    std::string out;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) out += ',';
        out += c_[i].get_str();
    }
    return out;
}

IntPoly IntPoly::monomial(const mpz_class& c, size_t k) {
    std::vector<mpz_class> v(k + 1, kZero);
    v[k] = c;
    return IntPoly(std::move(v));
}

const mpz_class& IntPoly::coeff(size_t i) const { return i < c_.size() ? c_[i] : kZero; }

const mpz_class& IntPoly::lc() const {
    if (c_.empty()) return kZero;
    return c_.back();
}

IntPoly IntPoly::operator-() const {
    IntPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<mpz_class> v(std::max(c_.size(), o.c_.size()), kZero);
    for (size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) + o.coeff(i);
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    std::vector<mpz_class> v(std::max(c_.size(), o.c_.size()), kZero);
    for (size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) - o.coeff(i);
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (c_.empty() || o.c_.empty()) return IntPoly();
    std::vector<mpz_class> v(c_.size() + o.c_.size() - 1, kZero);
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    return IntPoly(std::move(v));
}

IntPoly IntPoly::shifted(size_t k) const {
    if (c_.empty()) return IntPoly();
    std::vector<mpz_class> v(c_.size() + k, kZero);
    for (size_t i = 0; i < c_.size(); ++i) v[i + k] = c_[i];
    return IntPoly(std::move(v));
}

IntPoly IntPoly::derivative() const {
    if (c_.size() <= 1) return IntPoly();
    std::vector<mpz_class> v(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * long(i);
    return IntPoly(std::move(v));
}

mpz_class IntPoly::eval(const mpz_class& x) const {
    mpz_class r = 0;
    for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
}

mpz_class IntPoly::content() const {
    mpz_class g = 0;
    for (const auto& c : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (c_.empty()) return IntPoly();
    mpz_class g = content();
    if (c_.back() < 0) g = -g;
    IntPoly r = *this;
    for (auto& c : r.c_) c = exact_div(c, g);
    return r;
}

mpz_class IntPoly::max_abs_coeff() const {
    mpz_class m = 0;
    for (const auto& c : c_) {
        mpz_class a = abs(c);
        if (a > m) m = a;
    }
    return m;
}

bool IntPoly::try_divide(const IntPoly& d, IntPoly& quotient) const {
    if (d.is_zero()) throw std::invalid_argument("try_divide: zero divisor");
    if (is_zero()) {
        quotient = IntPoly();
        return true;
    }
    if (degree() < d.degree()) return false;
    std::vector<mpz_class> rem = c_;
    std::vector<mpz_class> q(size_t(degree() - d.degree()) + 1, kZero);
    int rdeg = degree();
    const int ddeg = d.degree();
    while (rdeg >= ddeg) {
        if (rem[rdeg] != 0) {
            mpz_class qc, rr;
            mpz_tdiv_qr(qc.get_mpz_t(), rr.get_mpz_t(), rem[rdeg].get_mpz_t(),
                        d.lc().get_mpz_t());
            if (rr != 0) return false;
            q[rdeg - ddeg] = qc;
            for (int i = 0; i <= ddeg; ++i) rem[rdeg - ddeg + i] -= qc * d.c_[i];
        }
        --rdeg;
    }
    for (const auto& c : rem)
        if (c != 0) return false;
    quotient = IntPoly(std::move(q));
    return true;
}

namespace {

// pseudo-remainder: lc(B)^(deg A - deg B + 1) * A = Q*B + R
IntPoly prem(const IntPoly& A, const IntPoly& B) {
    IntPoly R = A;
    int e = A.degree() - B.degree() + 1;
    const mpz_class& lb = B.lc();
    while (!R.is_zero() && R.degree() >= B.degree()) {
        IntPoly s = (IntPoly::monomial(R.lc(), size_t(R.degree() - B.degree()))) * B;
        std::vector<mpz_class> v(size_t(R.degree()) + 1);
        for (int i = 0; i <= R.degree(); ++i) v[size_t(i)] = lb * R.coeff(size_t(i)) - s.coeff(size_t(i));
        R = IntPoly(std::move(v));
        --e;
    }
    if (e > 0) {
        mpz_class f = pow_mpz(lb, (unsigned long)e);
        std::vector<mpz_class> v(R.coeffs());
        for (auto& c : v) c *= f;
        R = IntPoly(std::move(v));
    }
    return R;
}

IntPoly divide_by_const(const IntPoly& A, const mpz_class& c) {
    std::vector<mpz_class> v(A.coeffs());
    for (auto& x : v) x = exact_div(x, c);
    return IntPoly(std::move(v));
}

}  // namespace

IntPoly IntPoly::gcd(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() && b.is_zero()) return IntPoly();
    if (a.is_zero()) return b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    IntPoly A = a.primitive_part();
    IntPoly B = b.primitive_part();
    if (A.degree() < B.degree()) std::swap(A, B);
    if (B.degree() == 0) return IntPoly{1};
    mpz_class g = 1, h = 1;
    for (;;) {
        int delta = A.degree() - B.degree();
        IntPoly R = prem(A, B);
        if (R.is_zero()) return B.primitive_part();
        if (R.degree() == 0) return IntPoly{1};
        A = B;
        B = divide_by_const(R, g * pow_mpz(h, (unsigned long)delta));
        g = A.lc();
        if (delta > 0) h = exact_div(pow_mpz(g, (unsigned long)delta), pow_mpz(h, (unsigned long)(delta - 1)));
    }
}

mpz_class IntPoly::resultant(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return 0;
    IntPoly A = a, B = b;
    int sign = 1;
    if (A.degree() < B.degree()) {
        std::swap(A, B);
        if ((A.degree() & 1) && (B.degree() & 1)) sign = -sign;
    }
    mpz_class ca = A.content(), cb = B.content();
    if (A.lc() < 0) ca = -ca;
    if (B.lc() < 0) cb = -cb;
    A = divide_by_const(A, ca);
    B = divide_by_const(B, cb);
    mpz_class t = pow_mpz(abs(ca), (unsigned long)B.degree()) *
                  pow_mpz(abs(cb), (unsigned long)A.degree());
    if (ca < 0 && (B.degree() & 1)) sign = -sign;
    if (cb < 0 && (A.degree() & 1)) sign = -sign;
    mpz_class g = 1, h = 1;
    while (B.degree() > 0) {
        int delta = A.degree() - B.degree();
        if ((A.degree() & 1) && (B.degree() & 1)) sign = -sign;
        IntPoly R = prem(A, B);
        A = B;
        B = divide_by_const(R, g * pow_mpz(h, (unsigned long)delta));
        g = A.lc();
        if (delta > 0) h = exact_div(pow_mpz(g, (unsigned long)delta), pow_mpz(h, (unsigned long)(delta - 1)));
        if (B.is_zero()) return 0;
    }
    // deg B == 0, deg A >= 1: finish with h <- lc(B)^degA / h^(degA-1)
    if (A.degree() == 0) return mpz_class(sign) * t;
    mpz_class num = pow_mpz(B.lc(), (unsigned long)A.degree());
    mpz_class res = exact_div(num, pow_mpz(h, (unsigned long)(A.degree() - 1)));
    return mpz_class(sign) * t * res;
}

mpz_class IntPoly::discriminant() const {
    if (degree() < 1) throw std::invalid_argument("discriminant: degree must be >= 1");
    mpz_class r = resultant(*this, derivative());
    int d = degree();
    mpz_class disc = exact_div(r, lc());
    if ((uint64_t(d) * uint64_t(d - 1) / 2) & 1) disc = -disc;
    return disc;
}

IntPoly IntPoly::squarefree_part() const {
    if (is_zero()) throw std::invalid_argument("squarefree_part: zero polynomial");
    if (degree() == 0) return IntPoly{1};
    IntPoly p = primitive_part();
    IntPoly g = gcd(p, p.derivative());
    if (g.degree() == 0) return p;
    IntPoly q;
    bool ok = p.try_divide(g, q);
    assert(ok);
    (void)ok;
    return q.primitive_part();
}

}  // namespace polylab
