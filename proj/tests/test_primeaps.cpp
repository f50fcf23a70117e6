#include <cstdint>
#include <set>

#include "doctest.h"
#include "polylab/modarith.hpp"
#include "polylab/primeaps.hpp"

using namespace polylab;

TEST_CASE("length-1 progressions are just the primes of the interval") {
    const APCover c = find_disjoint_aps(1, 100, 1, 1, 1000);
    CHECK(c.aps.size() == 25);  // pi(100)
    CHECK(verify_cover(c));
}

TEST_CASE("anchor: the lone 3-term progression of primes in [50, 100]") {
    const APCover c = find_disjoint_aps(50, 100, 3, 10, 10);
    REQUIRE(c.aps.size() == 1);
    CHECK(c.aps[0] == std::pair<uint64_t, uint64_t>{61, 6});  // 61, 67, 73
    CHECK(verify_cover(c));
}

TEST_CASE("target_count truncates the greedy scan") {
    const APCover c = find_disjoint_aps(1, 10000, 3, 30, 7);
    CHECK(c.aps.size() == 7);
    CHECK(verify_cover(c));
}

TEST_CASE("progressions are disjoint, in range, prime, and step-bounded") {
    const APCover c = find_disjoint_aps(1000, 50000, 4, 60, 200);
    CHECK(c.aps.size() > 10);
    CHECK(verify_cover(c));
    std::set<uint64_t> used;
    for (const auto& [start, step] : c.aps) {
        CHECK(step <= 60);
        for (uint64_t t = 0; t < 4; ++t) {
            const uint64_t v = start + t * step;
            CHECK(v >= 1000);
            CHECK(v <= 50000);
            CHECK(is_prime(v));
            CHECK(used.insert(v).second);  // never reused
        }
    }
}

TEST_CASE("verify_cover rejects tampered covers") {
    APCover c = find_disjoint_aps(1, 1000, 3, 30, 20);
    REQUIRE(c.aps.size() >= 2);
    REQUIRE(verify_cover(c));

    APCover bad = c;
    bad.aps[0].first += 1;  // composite or misaligned terms
    CHECK(!verify_cover(bad));

    bad = c;
    bad.aps[1] = bad.aps[0];  // duplicated progression breaks disjointness
    CHECK(!verify_cover(bad));

    bad = c;
    bad.max_step = bad.aps[0].second - 1;
    for (const auto& ap : c.aps)
        if (ap.second > bad.max_step) {
            CHECK(!verify_cover(bad));
            break;
        }

    bad = c;
    bad.hi = 50;  // terms now out of range
    CHECK(!verify_cover(bad));
}

TEST_CASE("desk-scale supply: hundreds of 4-term progressions below 10^5") {
    const APCover c = find_disjoint_aps(1, 100000, 4, 150, 250);
    CHECK(c.aps.size() == 250);
    CHECK(verify_cover(c));
}
