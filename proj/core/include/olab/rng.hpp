#pragma once

#include <cstdint>

namespace olab {

// SplitMix64 finalizer; the project-wide bit mixer.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// Seed-splitting rule used everywhere: child k of a master seed is
// mix64(master + (k+1) * golden gamma). Workers that derive their seed by
// index produce identical streams no matter how work is scheduled.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    return mix64(master + (index + 1) * 0x9e3779b97f4a7c15ull);
}

// xoshiro256** (Blackman & Vigna), seeded from a single 64-bit value through
// a SplitMix64 stream. This is the only generator algorithm in the project.
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& word : state_) {
            sm += 0x9e3779b97f4a7c15ull;
            word = mix64(sm);
        }
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // uniform double in [0, 1)
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // uniform integer in [0, bound), bound >= 1
    std::uint64_t below(std::uint64_t bound) {
        using u128 = unsigned __int128;
        std::uint64_t x = next();
        u128 m = static_cast<u128>(x) * bound;
        auto lo = static_cast<std::uint64_t>(m);
        if (lo < bound) {
            const std::uint64_t threshold = (-bound) % bound;
            while (lo < threshold) {
                x = next();
                m = static_cast<u128>(x) * bound;
                lo = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

    bool coin() { return (next() >> 63) != 0; }

private:
    static constexpr std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }
    std::uint64_t state_[4];
};

}  // namespace olab
