// Counter-based pseudorandom generator with deterministic per-trajectory
// substreams (splitmix64: Steele, Lea & Flood; Vigna's fixed-increment
// variant).  Trajectory i always draws from the stream derived from
// (master_seed, i), so ensembles are reproducible for any worker count.
#pragma once

#include <cstdint>

namespace erw {

class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  private:
    std::uint64_t state_;
};

/// 64-bit avalanche (the splitmix64 finalizer).
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Seed of substream `index` under `master_seed`.
inline std::uint64_t substream_seed(std::uint64_t master_seed, std::uint64_t index) {
    return mix64(master_seed ^ mix64((index + 1) * 0x9E3779B97F4A7C15ULL));
}

inline SplitMix64 substream(std::uint64_t master_seed, std::uint64_t index) {
    return SplitMix64(substream_seed(master_seed, index));
}

}  // namespace erw
