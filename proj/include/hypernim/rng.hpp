#pragma once

#include <cstdint>

namespace hypernim {

/// Project-wide deterministic generator: SplitMix64 (Steele/Lea/Flood).
/// Every random choice in the library flows from a single 64-bit seed
/// through this generator, so runs are reproducible bit-for-bit across
/// platforms. Do not replace with <random> engines/distributions: their
/// output streams are not pinned by the C++ standard.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound). bound must be >= 1. Uses the multiply-shift
  /// reduction; the residual bias (< 2^-64 per draw) is irrelevant for
  /// instance generation.
  std::uint64_t next_below(std::uint64_t bound) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next_u64()) * bound) >> 64);
  }

  /// Uniform integer in [lo, hi], inclusive.
  int next_int(int lo, int hi) {
    return lo + static_cast<int>(
                    next_below(static_cast<std::uint64_t>(hi) - lo + 1));
  }

  bool next_bool() { return (next_u64() & 1ULL) != 0; }

  /// True with probability num/den.
  bool chance(std::uint64_t num, std::uint64_t den) {
    return next_below(den) < num;
  }

 private:
  std::uint64_t state_;
};

/// SplitMix64 finalizer as a standalone 64->64 mixer.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Decorrelated substream for trial `trial` of a seeded run. Used by the
/// verification suites so each trial is independently reproducible.
inline SplitMix64 trial_rng(std::uint64_t seed, std::uint64_t trial) {
  return SplitMix64(mix64(seed ^ mix64(trial + 1)));
}

}  // namespace hypernim
