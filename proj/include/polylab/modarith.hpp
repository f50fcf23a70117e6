#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "polylab/common.hpp"
#include "polylab/rng.hpp"

namespace polylab {

inline uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
    return uint64_t((unsigned __int128)a * b % m);
}

inline uint64_t addmod(uint64_t a, uint64_t b, uint64_t m) {
    uint64_t s = a + b;
    if (s >= m || s < a) s -= m;
    return s;
}

inline uint64_t submod(uint64_t a, uint64_t b, uint64_t m) {
    return a >= b ? a - b : a + (m - b);
}

uint64_t powmod(uint64_t a, uint64_t e, uint64_t m);
uint64_t invmod(uint64_t a, uint64_t m);  // m prime, a not divisible by m

// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(uint64_t n);

// Strong type for validated primes; most number-theoretic entry points take
// this instead of a bare integer so the primality check happens once.
struct Prime {
    uint64_t value;
    explicit Prime(uint64_t v);
};

// Jacobi symbol (a/n) for odd positive n.
int jacobi(int64_t a, uint64_t n);

// Legendre symbol (a/p); p must be an odd prime.
int legendre(int64_t a, Prime p);

// Prime factorization by trial division, n in [1, 2^40].
std::vector<std::pair<uint64_t, int>> factorize_small(uint64_t n);

inline constexpr uint64_t kDefaultSieveBudget = uint64_t(1) << 27;

// All primes in [lo, hi] via a segmented sieve.  The range length is capped
// by `budget`.
std::vector<uint64_t> primes_in(uint64_t lo, uint64_t hi,
                                uint64_t budget = kDefaultSieveBudget);

// Streams primes in [lo, hi] one segment at a time without materializing the
// whole list.  `seg_index` identifies the segment so callers can keep
// per-segment partial results in a fixed order.
void for_each_prime_segment(
    uint64_t lo, uint64_t hi,
    const std::function<void(size_t seg_index, const std::vector<uint64_t>& primes)>& fn,
    uint64_t budget = kDefaultSieveBudget);

size_t segment_count(uint64_t lo, uint64_t hi);

// Log-scale sampling window (X - log 2, X]: integers m with log m in that
// interval.  Endpoints are computed in extended precision and then adjusted
// so that membership of lo-1, lo, hi, hi+1 agrees with the definitional
// test on log m.
struct PrimeWindow {
    double X;
    uint64_t lo;
    uint64_t hi;

    static PrimeWindow from_X(double X);
    bool contains(uint64_t m) const;
    uint64_t width() const { return hi - lo + 1; }
};

// n uniform draws from [w.lo, w.hi], consumed sequentially from rng.
std::vector<uint64_t> sample_window_integers(const PrimeWindow& w, size_t n,
                                             CounterRng& rng);

}  // namespace polylab
