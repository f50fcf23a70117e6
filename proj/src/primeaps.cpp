#include "polylab/primeaps.hpp"

#include <stdexcept>
#include <unordered_set>

#include "polylab/modarith.hpp"

namespace polylab {

APCover find_disjoint_aps(uint64_t lo, uint64_t hi, uint64_t L, uint64_t K,
                          uint64_t target_count) {
    if (L < 1 || K < 1) throw std::invalid_argument("find_disjoint_aps: L, K >= 1");
    if (lo > hi) throw std::invalid_argument("find_disjoint_aps: empty interval");

    APCover cover;
    cover.lo = lo;
    cover.hi = hi;
    cover.length = L;
    cover.max_step = K;

    auto primes = primes_in(lo, hi);
    std::vector<bool> prime_at(hi - lo + 1, false);
    for (uint64_t p : primes) prime_at[p - lo] = true;
    std::vector<bool> used(hi - lo + 1, false);

    auto usable = [&](uint64_t t) {
        return t >= lo && t <= hi && prime_at[t - lo] && !used[t - lo];
    };

    for (uint64_t start : primes) {
        if (cover.aps.size() >= target_count) break;
        if (used[start - lo]) continue;
        if (L == 1) {
            used[start - lo] = true;
            cover.aps.emplace_back(start, 1);
            continue;
        }
        // an odd step from an odd start lands on even numbers
        uint64_t first_step = start == 2 ? 1 : 2;
        uint64_t stride = start == 2 ? 1 : 2;
        for (uint64_t step = first_step; step <= K; step += stride) {
            bool ok = true;
            for (uint64_t i = 1; i < L && ok; ++i) ok = usable(start + i * step);
            if (!ok) continue;
            for (uint64_t i = 0; i < L; ++i) used[start + i * step - lo] = true;
            cover.aps.emplace_back(start, step);
            break;
        }
    }
    return cover;
}

bool verify_cover(const APCover& cover) {
    std::unordered_set<uint64_t> seen;
    for (auto [start, step] : cover.aps) {
        if (step < 1 || step > cover.max_step) return false;
        for (uint64_t i = 0; i < cover.length; ++i) {
            uint64_t t = start + i * step;
            if (t < cover.lo || t > cover.hi) return false;
            if (!is_prime(t)) return false;
            if (!seen.insert(t).second) return false;
        }
    }
    return true;
}

}  // namespace polylab
