// Copyright cubetree authors. Licensed under the Apache 2.0 license. See LICENSE in the project root.
#pragma once

#include <cstdint>

namespace cubetree {

/// SplitMix64 stream (Steele/Lea/Vigna). Chosen because its output is fully
/// determined by the 64-bit seed with no platform- or libstdc++-dependent
/// behavior, so every seeded run is reproducible bit for bit. Substreams are
/// derived with stream_seed(), never by sharing one generator.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform draw from [0, n). Rejection sampling (arc4random_uniform
    /// style), so the distribution is exact for every n.
    uint64_t bounded(uint64_t n) {
        uint64_t min = (~n + 1) % n;  // 2^64 mod n
        uint64_t x;
        do {
            x = next();
        } while (x < min);
        return x % n;
    }

    /// Uniform in [0,1) with 53 random bits.
    double next_double() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    /// +1 or -1, equiprobable.
    int sign() { return (next() >> 63) ? +1 : -1; }

private:
    uint64_t state_;
};

/// Seed for a labeled substream of `parent`. The map is a fixed SplitMix64
/// finalizer over parent + phi * (label + 1); distinct labels give
/// independent-looking streams and the derivation is part of the on-disk
/// reproducibility contract (manifests record only the parent seed).
inline uint64_t stream_seed(uint64_t parent, uint64_t label) {
    uint64_t z = parent + 0x9E3779B97F4A7C15ULL * (label + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace cubetree
