#pragma once

#include <cstdint>

namespace p2mnf {

// splitmix64 finalizer; the fixed 64-bit mixing permutation used for
// per-trial seed derivation.
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Per-trial seeds: mix64(seed XOR trial-index).
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    return mix64(seed ^ index);
}

// splitmix64 stream: tiny, deterministic, identical on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix64(state_);
    }

    // Uniform in [0, n) by rejection sampling; n >= 1.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = ~0ULL - ~0ULL % n;
        std::uint64_t v = next();
        while (v >= limit) v = next();
        return v % n;
    }

private:
    std::uint64_t state_;
};

}  // namespace p2mnf
