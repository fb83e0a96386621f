#pragma once

#include <cstdint>

namespace hodgespec {

/// SplitMix64 (Steele/Lea/Flood 2014): 64-bit state, portable across
/// platforms and languages. All randomized catalog entries are specified in
/// terms of this generator so runs are bit-reproducible from the seed.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1), 53 mantissa bits.
    double next_double() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    /// Uniform integer in [0, bound); plain modulo (the tiny bias is
    /// irrelevant here, determinism is what matters).
    std::uint64_t next_below(std::uint64_t bound) {
        return next() % bound;
    }

private:
    std::uint64_t state_;
};

} // namespace hodgespec
