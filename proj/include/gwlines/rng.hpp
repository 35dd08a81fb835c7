#ifndef GWLINES_RNG_HPP
#define GWLINES_RNG_HPP

#include <cstdint>

namespace gwlines {

/// Deterministic 64-bit counter-based generator (splitmix64).
///
/// Output i of a stream keyed by `seed` is mix(seed + (i+1)*GAMMA), so the
/// sequence depends only on the seed and the call index. Never the platform
/// default engine: trial results must be reproducible bit-for-bit across
/// builds and machines.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform-ish draw in [lo, hi] by reduction. The modulo bias is
    /// irrelevant here (ranges are tiny against 2^64) and the reduction is
    /// platform-independent, which is the property we need.
    long next_in_range(long lo, long hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long>(next() % span);
    }

    /// Per-trial derived seed: seed XOR trial index.
    static std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
        return seed ^ trial;
    }

private:
    std::uint64_t state_;
};

} // namespace gwlines

#endif
