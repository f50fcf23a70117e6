#include "polylab/equidist.hpp"

#include <omp.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "polylab/common.hpp"
#include "polylab/rng.hpp"

namespace polylab {

std::pair<uint64_t, uint64_t> walk_term(Prime q, uint64_t a, uint64_t i) {
    a %= q.value;
    uint64_t e1 = powmod(a, i, q.value);
    uint64_t e2 = 0;
    if (i > 0) e2 = mulmod(i % q.value, powmod(a, i - 1, q.value), q.value);
    return {e1, e2};
}

namespace {

uint64_t term_residue(Prime q, uint64_t a, uint64_t i, uint64_t xi1, uint64_t xi2) {
    auto [e1, e2] = walk_term(q, a, i);
    return addmod(mulmod(xi1 % q.value, e1, q.value), mulmod(xi2 % q.value, e2, q.value),
                  q.value);
}

constexpr double kTau = 6.283185307179586476925286766559;
constexpr size_t kLogSpaceCutoff = 10'000;
constexpr int kMaxEnumBits = 24;

std::vector<std::pair<uint64_t, uint64_t>> walk_terms(const WalkSpec& w) {
    std::vector<std::pair<uint64_t, uint64_t>> t;
    t.reserve(w.exponents.size());
    for (uint64_t i : w.exponents) t.push_back(walk_term(w.q, w.a, i));
    return t;
}

// Gray-code enumeration of all 2^n sign choices over the terms in [first, n),
// signs of terms below `first` fixed by `prefix` bits.  Visits each state once
// and bumps counts[u*q+v].
void enumerate_signs(uint64_t q, const std::vector<std::pair<uint64_t, uint64_t>>& t,
                     size_t first, uint64_t prefix, std::vector<uint64_t>& counts) {
    const size_t n = t.size();
    uint64_t u = 0, v = 0;
    for (size_t i = 0; i < n; ++i) {
        bool neg = i < first && ((prefix >> i) & 1);
        if (neg) {
            u = submod(u, t[i].first, q);
            v = submod(v, t[i].second, q);
        } else {
            u = addmod(u, t[i].first, q);
            v = addmod(v, t[i].second, q);
        }
    }
    const size_t bits = n - first;
    counts[u * q + v]++;
    uint64_t cur = 0;
    for (uint64_t k = 1; k < (uint64_t(1) << bits); ++k) {
        int b = std::countr_zero(k);
        size_t i = first + size_t(b);
        uint64_t du = mulmod(2 % q, t[i].first, q);
        uint64_t dv = mulmod(2 % q, t[i].second, q);
        if ((cur >> b) & 1) {
            u = addmod(u, du, q);
            v = addmod(v, dv, q);
        } else {
            u = submod(u, du, q);
            v = submod(v, dv, q);
        }
        cur ^= uint64_t(1) << b;
        counts[u * q + v]++;
    }
}

WalkDistribution counts_to_distribution(uint64_t q, const std::vector<uint64_t>& counts,
                                        size_t nbits) {
    WalkDistribution d;
    d.q = q;
    d.prob.resize(counts.size());
    const double scale = std::ldexp(1.0, -int(nbits));
    for (size_t i = 0; i < counts.size(); ++i) d.prob[i] = double(counts[i]) * scale;
    return d;
}

}  // namespace

double fourier_coeff(const WalkSpec& w, uint64_t xi1, uint64_t xi2) {
    const uint64_t q = w.q.value;
    if (w.exponents.size() <= kLogSpaceCutoff) {
        double prod = 1.0;
        for (uint64_t i : w.exponents) {
            uint64_t b = term_residue(w.q, w.a, i, xi1, xi2);
            prod *= std::cos(kTau * double(b) / double(q));
        }
        return prod;
    }
    double logsum = 0.0;
    int sign = 1;
    for (uint64_t i : w.exponents) {
        uint64_t b = term_residue(w.q, w.a, i, xi1, xi2);
        double f = std::cos(kTau * double(b) / double(q));
        if (f == 0.0) return 0.0;
        if (f < 0) {
            sign = -sign;
            f = -f;
        }
        logsum += std::log(f);
    }
    return sign * std::exp(logsum);
}

double max_fourier_coeff(const WalkSpec& w) {
    const uint64_t q = w.q.value;
    double best = 0.0;
    for (uint64_t xi1 = 0; xi1 < q; ++xi1)
        for (uint64_t xi2 = 0; xi2 < q; ++xi2) {
            if (xi1 == 0 && xi2 == 0) continue;
            best = std::max(best, std::fabs(fourier_coeff(w, xi1, xi2)));
        }
    return best;
}

namespace ref {

WalkDistribution walk_distribution_bruteforce(const WalkSpec& w) {
    const uint64_t q = w.q.value;
    const size_t n = w.exponents.size();
    if (n > kMaxEnumBits)
        throw budget_error("walk_distribution_bruteforce: |I| exceeds 24");
    auto t = walk_terms(w);
    std::vector<uint64_t> counts(q * q, 0);
    enumerate_signs(q, t, 0, 0, counts);
    return counts_to_distribution(q, counts, n);
}

}  // namespace ref

WalkDistribution walk_distribution_bruteforce(const WalkSpec& w) {
    const uint64_t q = w.q.value;
    const size_t n = w.exponents.size();
    if (n > kMaxEnumBits)
        throw budget_error("walk_distribution_bruteforce: |I| exceeds 24");
    auto t = walk_terms(w);

    size_t split = 0;
    int threads = omp_get_max_threads();
    while (split < n && (size_t(1) << split) < 4 * size_t(threads)) ++split;
    const uint64_t blocks = uint64_t(1) << split;

    std::vector<std::vector<uint64_t>> partial(blocks);
#pragma omp parallel for schedule(dynamic)
    for (uint64_t p = 0; p < blocks; ++p) {
        partial[p].assign(q * q, 0);
        enumerate_signs(q, t, split, p, partial[p]);
    }
    std::vector<uint64_t> counts(q * q, 0);
    for (uint64_t p = 0; p < blocks; ++p)
        for (size_t i = 0; i < counts.size(); ++i) counts[i] += partial[p][i];
    return counts_to_distribution(q, counts, n);
}

WalkDistribution walk_distribution_fourier(const WalkSpec& w) {
    const uint64_t q = w.q.value;
    std::vector<double> yhat(q * q);
    for (uint64_t xi1 = 0; xi1 < q; ++xi1)
        for (uint64_t xi2 = 0; xi2 < q; ++xi2)
            yhat[xi1 * q + xi2] = fourier_coeff(w, xi1, xi2);

    std::vector<double> cosk(q);
    for (uint64_t k = 0; k < q; ++k) cosk[k] = std::cos(kTau * double(k) / double(q));

    WalkDistribution d;
    d.q = q;
    d.prob.assign(q * q, 0.0);
#pragma omp parallel for schedule(static)
    for (uint64_t x1 = 0; x1 < q; ++x1) {
        for (uint64_t x2 = 0; x2 < q; ++x2) {
            double acc = 0.0;
            for (uint64_t xi1 = 0; xi1 < q; ++xi1) {
                uint64_t ph1 = mulmod(xi1, x1, q);
                for (uint64_t xi2 = 0; xi2 < q; ++xi2) {
                    uint64_t ph = addmod(ph1, mulmod(xi2, x2, q), q);
                    acc += cosk[ph] * yhat[xi1 * q + xi2];
                }
            }
            d.prob[x1 * q + x2] = acc / double(q * q);
        }
    }
    return d;
}

double total_variation(const WalkDistribution& a, const WalkDistribution& b) {
    if (a.q != b.q) throw std::invalid_argument("total_variation: mismatched moduli");
    double s = 0.0;
    for (size_t i = 0; i < a.prob.size(); ++i) s += std::fabs(a.prob[i] - b.prob[i]);
    return 0.5 * s;
}

double max_point_mass_1d(Prime q, uint64_t a, const std::vector<uint64_t>& exponents) {
    const size_t n = exponents.size();
    if (n > kMaxEnumBits) throw budget_error("max_point_mass_1d: |I| exceeds 24");
    const uint64_t qq = q.value;
    std::vector<uint64_t> e1(n);
    for (size_t i = 0; i < n; ++i) e1[i] = walk_term(q, a, exponents[i]).first;

    std::vector<uint64_t> counts(qq, 0);
    uint64_t u = 0;
    for (size_t i = 0; i < n; ++i) u = addmod(u, e1[i], qq);
    counts[u]++;
    uint64_t cur = 0;
    for (uint64_t k = 1; k < (uint64_t(1) << n); ++k) {
        int b = std::countr_zero(k);
        uint64_t du = mulmod(2 % qq, e1[size_t(b)], qq);
        u = ((cur >> b) & 1) ? addmod(u, du, qq) : submod(u, du, qq);
        cur ^= uint64_t(1) << b;
        counts[u]++;
    }
    uint64_t best = *std::max_element(counts.begin(), counts.end());
    return double(best) * std::ldexp(1.0, -int(n));
}

PointMassEstimate max_point_mass_1d_mc(Prime q, uint64_t a,
                                       const std::vector<uint64_t>& exponents,
                                       uint64_t samples, uint64_t seed) {
    if (samples < 1) throw std::invalid_argument("max_point_mass_1d_mc: samples >= 1");
    const uint64_t qq = q.value;
    std::vector<uint64_t> e1(exponents.size());
    for (size_t i = 0; i < exponents.size(); ++i) e1[i] = walk_term(q, a, exponents[i]).first;

    std::vector<uint64_t> counts(qq, 0);
    for (uint64_t s = 0; s < samples; ++s) {
        CounterRng rng(hash2(seed, s));
        uint64_t u = 0;
        for (uint64_t e : e1)
            u = rng.sign() > 0 ? addmod(u, e, qq) : submod(u, e, qq);
        counts[u]++;
    }
    uint64_t best = *std::max_element(counts.begin(), counts.end());
    double p = double(best) / double(samples);
    PointMassEstimate out;
    out.value = p;
    out.std_error = std::sqrt(p * (1.0 - p) / double(samples));
    return out;
}

int64_t least_abs_residue(uint64_t v, Prime q) {
    v %= q.value;
    if (2 * v <= q.value) return int64_t(v);
    return int64_t(v) - int64_t(q.value);
}

bool lemma6_smallness_holds(Prime q, uint64_t a, uint64_t xi1, uint64_t xi2,
                            uint64_t k, uint64_t j0, int l, uint64_t r) {
    if (l < 3) throw std::invalid_argument("lemma6_smallness_holds: l >= 3 required");
    if (!is_prime(r) || r <= uint64_t(l) * uint64_t(l))
        throw std::invalid_argument("lemma6_smallness_holds: r must be a prime > l^2");
    const long double threshold =
        powl((long double)q.value, 1.0L - 2.0L / (l + 1)) / (l + 1);
    const uint64_t jmax = uint64_t(l) * (r + 1);
    for (uint64_t j = 0; j <= jmax; ++j) {
        uint64_t e = j * k + j0;
        uint64_t v = term_residue(q, a, e, xi1, xi2);
        long double mag = fabsl((long double)least_abs_residue(v, q));
        if (!(mag < threshold)) return false;
    }
    return true;
}

std::pair<uint64_t, uint64_t> recurrence_component_sums(Prime q, uint64_t a,
                                                        const std::vector<uint64_t>& alpha,
                                                        uint64_t j0) {
    const uint64_t qq = q.value;
    uint64_t s1 = 0, s2 = 0;
    for (size_t j = 0; j < alpha.size(); ++j) {
        auto [e1, e2] = walk_term(q, a, j + j0);
        s1 = addmod(s1, mulmod(alpha[j] % qq, e1, qq), qq);
        s2 = addmod(s2, mulmod(alpha[j] % qq, e2, qq), qq);
    }
    return {s1, s2};
}

bool lambda_membership(const std::vector<long long>& terms, const IntPoly& p) {
    if (terms.empty()) throw std::invalid_argument("lambda_membership: empty sequence");
    if (p.is_zero()) return true;
    const size_t N = terms.size() - 1;
    const size_t d = size_t(p.degree());
    if (d > N)
        throw std::invalid_argument("lambda_membership: deg exceeds sequence length");
    for (size_t j0 = 0; j0 + d <= N; ++j0) {
        mpz_class acc = 0;
        for (size_t j = 0; j <= d; ++j) acc += p.coeff(j) * long(terms[j + j0]);
        if (acc != 0) return false;
    }
    return true;
}

std::vector<long long> recurrence_sequence(std::vector<long long> init,
                                           const std::vector<long long>& rec, size_t len) {
    if (init.empty() || rec.empty() || init.size() < rec.size())
        throw std::invalid_argument("recurrence_sequence: need |init| >= |rec| >= 1");
    init.reserve(len);
    while (init.size() < len) {
        __int128 acc = 0;
        for (size_t j = 0; j < rec.size(); ++j)
            acc += __int128(rec[j]) * init[init.size() - 1 - j];
        if (acc > INT64_MAX || acc < INT64_MIN)
            throw std::overflow_error("recurrence_sequence: term overflow");
        init.push_back((long long)acc);
    }
    init.resize(len);
    return init;
}

}  // namespace polylab
