// Deterministic seeded randomness (splitmix64) for identity testing.
#ifndef SIEGEL3_RNG_HPP
#define SIEGEL3_RNG_HPP

#include <cstdint>
#include <vector>

#include "siegel3/gf3.hpp"

namespace siegel3 {

constexpr uint64_t kDefaultSeed = 0x5EED;

struct SplitMix64 {
    uint64_t state;

    explicit SplitMix64(uint64_t seed = kDefaultSeed) : state(seed) {}

    uint64_t next() {
        state += 0x9E3779B97F4A7C15ull;
        uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // uniform in [0, n) by rejection-free reduction (n small, bias negligible is
    // not acceptable here, so use rejection)
    uint64_t below(uint64_t n) {
        uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % n;
    }

    GF3 gf3() { return GF3(static_cast<uint8_t>(below(3))); }

    GF3x gf3x() {
        uint64_t v = next();
        GF3x r;
        for (int i = 0; i < 8; ++i) {
            r.c[i] = static_cast<uint8_t>(v % 3);
            v /= 3;
        }
        return r;
    }

    std::vector<GF3x> gf3x_point(size_t n) {
        std::vector<GF3x> p;
        p.reserve(n);
        for (size_t i = 0; i < n; ++i) p.push_back(gf3x());
        return p;
    }
};

}  // namespace siegel3

#endif
