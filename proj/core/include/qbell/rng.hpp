#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace qbell {

/// Deterministic generator used everywhere randomness is needed.
/// std::mt19937_64 emits the same 64-bit stream for a given seed on every
/// conforming platform. The mappings below avoid std::*_distribution,
/// whose output is implementation-defined, so seeded results are
/// bit-reproducible.
using Rng = std::mt19937_64;

/// Uniform double in [0, 1): the top 53 bits of one engine draw.
inline double uniform_unit(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform double in [lo, hi).
inline double uniform_in(Rng& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform_unit(rng);
}

/// Unit-rate exponential by inverse CDF, -log(1 - u); finite for every draw.
inline double exponential_unit(Rng& rng) {
  return -std::log1p(-uniform_unit(rng));
}

}  // namespace qbell
