#include "polylab/modarith.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>

namespace polylab {

uint64_t powmod(uint64_t a, uint64_t e, uint64_t m) {
    if (m == 1) return 0;
    uint64_t r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

uint64_t invmod(uint64_t a, uint64_t m) {
    // extended Euclid; m prime in all call sites but the algorithm only
    // needs gcd(a, m) = 1
    int64_t t = 0, nt = 1;
    uint64_t r = m, nr = a % m;
    while (nr != 0) {
        uint64_t q = r / nr;
        int64_t tmp_t = t - int64_t(q) * nt;
        t = nt;
        nt = tmp_t;
        uint64_t tmp_r = r - q * nr;
        r = nr;
        nr = tmp_r;
    }
    if (r != 1) throw std::domain_error("invmod: not invertible");
    return t < 0 ? uint64_t(t + int64_t(m)) : uint64_t(t);
}

namespace {

bool miller_rabin_round(uint64_t n, uint64_t a, uint64_t d, int s) {
    a %= n;
    if (a == 0) return true;
    uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = mulmod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

}  // namespace

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // witness set covering the full 64-bit range
    for (uint64_t a : {2ull, 325ull, 9375ull, 28178ull, 450775ull, 9780504ull, 1795265022ull}) {
        if (!miller_rabin_round(n, a, d, s)) return false;
    }
    return true;
}

Prime::Prime(uint64_t v) : value(v) {
    if (!is_prime(v)) throw std::invalid_argument("Prime: " + std::to_string(v) + " is not prime");
}

int jacobi(int64_t a, uint64_t n) {
    if (n == 0 || (n & 1) == 0) throw std::invalid_argument("jacobi: modulus must be odd and positive");
    uint64_t ua = a >= 0 ? uint64_t(a) % n : n - (uint64_t(-(a + 1)) + 1) % n;
    if (ua == n) ua = 0;
    int sign = 1;
    while (ua != 0) {
        while ((ua & 1) == 0) {
            ua >>= 1;
            uint64_t r = n & 7;
            if (r == 3 || r == 5) sign = -sign;
        }
        std::swap(ua, n);
        if ((ua & 3) == 3 && (n & 3) == 3) sign = -sign;
        ua %= n;
    }
    return n == 1 ? sign : 0;
}

int legendre(int64_t a, Prime p) {
    if (p.value == 2) throw std::invalid_argument("legendre: p must be odd");
    return jacobi(a, p.value);
}

std::vector<std::pair<uint64_t, int>> factorize_small(uint64_t n) {
    if (n < 1 || n > (uint64_t(1) << 40))
        throw std::invalid_argument("factorize_small: n out of range");
    std::vector<std::pair<uint64_t, int>> out;
    auto strip = [&](uint64_t p) {
        if (n % p) return;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    };
    strip(2);
    strip(3);
    strip(5);
    // 2-3-5 wheel
    static constexpr int wheel[8] = {4, 2, 4, 2, 4, 6, 2, 6};
    uint64_t d = 7;
    int wi = 0;
    while (d * d <= n) {
        strip(d);
        d += wheel[wi];
        wi = (wi + 1) & 7;
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

namespace {

constexpr uint64_t kSegmentLen = uint64_t(1) << 20;

std::vector<uint64_t> base_primes_upto(uint64_t n) {
    std::vector<uint8_t> comp(n + 1, 0);
    std::vector<uint64_t> ps;
    for (uint64_t i = 2; i <= n; ++i) {
        if (comp[i]) continue;
        ps.push_back(i);
        for (uint64_t j = i * i; j <= n; j += i) comp[j] = 1;
    }
    return ps;
}

void sieve_segment(uint64_t lo, uint64_t hi, const std::vector<uint64_t>& base,
                   std::vector<uint64_t>& out) {
    out.clear();
    const size_t len = size_t(hi - lo + 1);
    std::vector<uint8_t> comp(len, 0);
    if (lo == 0) {
        if (len > 0) comp[0] = 1;
        if (len > 1) comp[1] = 1;
    } else if (lo == 1) {
        comp[0] = 1;
    }
    for (uint64_t p : base) {
        if (p * p > hi) break;
        uint64_t start = std::max(p * p, (lo + p - 1) / p * p);
        for (uint64_t m = start; m <= hi; m += p) comp[size_t(m - lo)] = 1;
    }
    for (size_t i = 0; i < len; ++i)
        if (!comp[i]) out.push_back(lo + i);
}

}  // namespace

size_t segment_count(uint64_t lo, uint64_t hi) {
    if (hi < lo) return 0;
    return size_t((hi - lo) / kSegmentLen + 1);
}

void for_each_prime_segment(
    uint64_t lo, uint64_t hi,
    const std::function<void(size_t, const std::vector<uint64_t>&)>& fn,
    uint64_t budget) {
    if (hi < lo) return;
    if (hi - lo + 1 > budget)
        throw budget_error("sieve range " + std::to_string(hi - lo + 1) +
                           " exceeds budget " + std::to_string(budget));
    if (hi > (uint64_t(1) << 52))
        throw budget_error("sieve upper bound exceeds 2^52");
    uint64_t root = uint64_t(std::sqrt((double)hi)) + 2;
    auto base = base_primes_upto(root);
    const size_t nseg = segment_count(lo, hi);
    std::vector<uint64_t> seg;
    for (size_t k = 0; k < nseg; ++k) {
        uint64_t slo = lo + k * kSegmentLen;
        uint64_t shi = std::min(hi, slo + kSegmentLen - 1);
        sieve_segment(slo, shi, base, seg);
        fn(k, seg);
    }
}

std::vector<uint64_t> primes_in(uint64_t lo, uint64_t hi, uint64_t budget) {
    std::vector<uint64_t> out;
    for_each_prime_segment(
        lo, hi,
        [&](size_t, const std::vector<uint64_t>& seg) {
            out.insert(out.end(), seg.begin(), seg.end());
        },
        budget);
    return out;
}

PrimeWindow PrimeWindow::from_X(double X) {
    if (!(X > 1.0) || X > 42.5)
        throw std::invalid_argument("PrimeWindow: X must lie in (1, 42.5]");
    const long double Xl = X;
    const long double lo_edge = Xl - logl(2.0L);
    auto inside = [&](uint64_t m) {
        if (m == 0) return false;
        long double lm = logl((long double)m);
        return lm > lo_edge && lm <= Xl;
    };
    uint64_t hi = (uint64_t)floorl(expl(Xl));
    while (inside(hi + 1)) ++hi;
    while (hi > 1 && !inside(hi)) --hi;
    uint64_t lo = (uint64_t)floorl(expl(lo_edge)) + 1;
    while (lo > 1 && inside(lo - 1)) --lo;
    while (!inside(lo)) ++lo;
    return PrimeWindow{X, lo, hi};
}

bool PrimeWindow::contains(uint64_t m) const {
    if (m == 0) return false;
    long double lm = logl((long double)m);
    return lm > (long double)X - logl(2.0L) && lm <= (long double)X;
}

std::vector<uint64_t> sample_window_integers(const PrimeWindow& w, size_t n,
                                             CounterRng& rng) {
    std::vector<uint64_t> out(n);
    const uint64_t span = w.hi - w.lo + 1;
    for (size_t i = 0; i < n; ++i) out[i] = w.lo + rng.below(span);
    return out;
}

}  // namespace polylab
