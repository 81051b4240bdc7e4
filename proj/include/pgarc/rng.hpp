#pragma once

#include <cstdint>

namespace pgarc {

// Fixed 64-bit PRNG so results reproduce across platforms and standard-library
// versions (std::mt19937 would do, but its distributions are not portable).
//
// Core generator: SplitMix64 (public-domain algorithm by Sebastiano Vigna).
// Independent streams: stream k of seed s starts from mix(s + k * GAMMA), so
// restart attempts can run in any order / on any thread and still draw the
// same values.
class Rng {
public:
    explicit Rng(uint64_t state) : state_(state) {}

    static constexpr uint64_t GAMMA = 0x9E3779B97F4A7C15ull;

    // Stream k of a user seed; used as "attempt k" in the search engine.
    static Rng stream(uint64_t seed, uint64_t k) { return Rng(mix(seed + k * GAMMA)); }

    uint64_t next() {
        state_ += GAMMA;
        return mix(state_);
    }

    // Uniform in [0, n), n >= 1. Lemire's multiply-shift method with the
    // standard rejection step, so the result is exactly unbiased.
    uint64_t below(uint64_t n) {
        uint64_t x = next();
        __uint128_t m = static_cast<__uint128_t>(x) * n;
        uint64_t lo = static_cast<uint64_t>(m);
        if (lo < n) {
            uint64_t t = (0 - n) % n;
            while (lo < t) {
                x = next();
                m = static_cast<__uint128_t>(x) * n;
                lo = static_cast<uint64_t>(m);
            }
        }
        return static_cast<uint64_t>(m >> 64);
    }

private:
    static uint64_t mix(uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    uint64_t state_;
};

} // namespace pgarc
