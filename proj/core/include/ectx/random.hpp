#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace ectx {

using Rng = std::mt19937_64;

// SplitMix64 finalizer; derives independent sub-seeds from a master seed so
// that parallel units (restarts, edges, resamples) never share a stream.
constexpr std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Uniform in [0, 1) built from the top 53 bits. Unlike the std distributions
// this is bit-identical across standard library implementations.
inline double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform(Rng& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform01(rng);
}

inline double standard_exponential(Rng& rng) {
  return -std::log1p(-uniform01(rng));
}

// Box-Muller; one value per call.
inline double standard_normal(Rng& rng) {
  double u1 = uniform01(rng);
  while (u1 <= 0.0) u1 = uniform01(rng);
  const double u2 = uniform01(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace ectx
