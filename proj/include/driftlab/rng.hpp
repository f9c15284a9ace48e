#pragma once

#include <cstdint>

namespace driftlab {

// SplitMix64: tiny, fast, and trivially splittable.  The reproducibility
// contract is (seed, trial_index) -> identical stream, independent of
// thread scheduling, so parallel Monte Carlo trials stay deterministic.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  // Stream for one trial: decorrelate the trial index with the golden-ratio
  // increment and one finalizer round before seeding.
  static SplitMix64 for_trial(std::uint64_t seed, std::uint64_t trial_index) {
    return SplitMix64(mix(seed + 0x9E3779B97F4A7C15ULL * (trial_index + 1)));
  }

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix(state_);
  }

  // Bounded draw by 128-bit multiply-shift (Lemire).  The modulo bias is
  // bound/2^64, far below anything statistically visible here.
  std::uint32_t next_below(std::uint32_t bound) {
    return static_cast<std::uint32_t>(
        (static_cast<unsigned __int128>(next()) * bound) >> 64);
  }

  double next_unit() {  // uniform in [0, 1) with 53 random bits
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
};

}  // namespace driftlab
