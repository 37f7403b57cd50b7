#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace fraclat {

// All randomness flows through these helpers so that a given seed produces
// the same stream on every platform. std::mt19937_64 output is fixed by the
// C++ standard; the mappings below replace std::uniform_*_distribution,
// whose results are implementation-defined.
using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t seed) { return Rng{seed}; }

/// Uniform double in [0, 1) from the top 53 bits of one draw.
inline double uniform_unit(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform integer in [0, n), unbiased via rejection. n must be > 0.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t n) {
  constexpr std::uint64_t top = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = top - top % n;  // multiple of n
  std::uint64_t v = rng();
  while (v >= limit) v = rng();
  return v % n;
}

/// Uniform double in [lo, hi).
inline double uniform_range(Rng& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform_unit(rng);
}

}  // namespace fraclat
