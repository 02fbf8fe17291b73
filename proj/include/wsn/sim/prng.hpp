#pragma once

#include <cstdint>

namespace wsn {

/// SplitMix64. Tiny, fast, splittable, and fully specified, so two
/// implementations seeded alike produce the same stream. Used everywhere a
/// reproducible draw is needed (link loss, payload fill, graph generation).
class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}

  constexpr std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1) with 53 bits of resolution.
  constexpr double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform in [0, bound); bound 0 yields 0. Modulo bias is irrelevant at
  /// the bounds used here.
  constexpr std::uint64_t next_below(std::uint64_t bound) {
    return bound == 0 ? 0 : next() % bound;
  }

  /// Independent child stream.
  constexpr SplitMix64 split() { return SplitMix64(next()); }

 private:
  std::uint64_t state_;
};

}  // namespace wsn
