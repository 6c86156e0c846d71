#pragma once

#include <cstdint>

namespace belmap {

/// Counter-based deterministic random source.
///
/// `splitmix64_at(seed, n)` is the n-th output of the splitmix64 stream
/// seeded with `seed`. Each draw depends only on (seed, counter), so maps
/// built from per-cell counters are reproducible and independent of
/// evaluation order. This generator is part of the on-disk contract:
/// golden files assume it.
inline std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Uniform draw in [0, 1) from the top 53 bits of splitmix64_at.
inline double uniform_unit(std::uint64_t seed, std::uint64_t index) {
  return static_cast<double>(splitmix64_at(seed, index) >> 11) * 0x1.0p-53;
}

/// Uniform draw in [low, high).
inline double uniform_in(std::uint64_t seed, std::uint64_t index, double low,
                         double high) {
  return low + (high - low) * uniform_unit(seed, index);
}

}  // namespace belmap
