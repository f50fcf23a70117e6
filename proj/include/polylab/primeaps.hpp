#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace polylab {

// Pairwise disjoint arithmetic progressions of primes inside [lo, hi]:
// every AP has L prime terms and common difference at most K, and no prime
// appears in two progressions.
struct APCover {
    uint64_t lo = 0, hi = 0;
    uint64_t length = 0;    // terms per progression
    uint64_t max_step = 0;
    std::vector<std::pair<uint64_t, uint64_t>> aps;  // (start, step)
};

// Greedy scan: starts ascend over the primes of the interval, steps ascend;
// a progression is taken iff all terms are prime and still unused, and its
// terms are then marked used.  Stops at target_count or exhaustion (callers
// check the count).  For L >= 2 and starts > 2 only even steps are tried.
APCover find_disjoint_aps(uint64_t lo, uint64_t hi, uint64_t L, uint64_t K,
                          uint64_t target_count);

// Re-checks every invariant from scratch: term primality, range, step bound,
// and global disjointness.
bool verify_cover(const APCover& cover);

}  // namespace polylab
