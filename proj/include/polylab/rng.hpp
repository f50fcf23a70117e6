#pragma once

#include <cstdint>

namespace polylab {

// splitmix64 finalizer.  Used both as a bit mixer for keyed hashing and as
// the per-stream generator.  All randomness in the library flows through
// this so that draws are reproducible across platforms and thread counts.
constexpr uint64_t mix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

constexpr uint64_t hash2(uint64_t a, uint64_t b) {
    return mix64(a ^ mix64(b ^ 0x5851f42d4c957f2dull));
}

constexpr uint64_t hash3(uint64_t a, uint64_t b, uint64_t c) {
    return hash2(hash2(a, b), c);
}

// Counter-based generator: state is (key, counter), output is a hash of the
// pair.  Streams with distinct keys are independent for our purposes, and a
// stream can be reconstructed from its key alone, which is what makes
// per-sample derivation hash(seed, cell, index) order-independent.
class CounterRng {
public:
    explicit CounterRng(uint64_t key) : key_(key) {}

    uint64_t next() { return hash2(key_, ctr_++); }

    // Unbiased uniform draw from [0, n) by rejection.
    uint64_t below(uint64_t n) {
        if (n <= 1) return 0;
        const uint64_t limit = ~uint64_t{0} - (~uint64_t{0} % n + 1) % n;
        for (;;) {
            uint64_t v = next();
            if (v <= limit) return v % n;
        }
    }

    // ±1 with equal probability.
    int sign() { return (next() & 1) ? 1 : -1; }

    double unit() { return double(next() >> 11) * 0x1.0p-53; }

private:
    uint64_t key_;
    uint64_t ctr_ = 0;
};

}  // namespace polylab
