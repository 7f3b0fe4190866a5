#pragma once

#include <cstdint>
#include <random>

#include "jgap/linalg.hpp"

namespace jgap {

using Rng = std::mt19937_64;

/// Independent stream for task `index` under `master_seed`. Streams are
/// decorrelated by a splitmix64 scramble of (seed, index).
inline Rng make_stream(std::uint64_t master_seed, std::uint64_t index = 0) {
  auto mix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  std::seed_seq seq{mix(master_seed), mix(master_seed ^ mix(index + 1))};
  return Rng(seq);
}

/// Uniform point on S^{n-1} (normalized Gaussian).
inline Vector random_unit_vector(Rng& rng, Eigen::Index n) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vector v(n);
  double norm = 0.0;
  do {
    for (Eigen::Index i = 0; i < n; ++i) v[i] = gauss(rng);
    norm = v.norm();
  } while (norm < 1e-300);
  return v / norm;
}

/// Uniform point on the great sphere orthogonal to the unit vector `beta`.
inline Vector random_equatorial_vector(Rng& rng, const Vector& beta) {
  for (;;) {
    Vector v = random_unit_vector(rng, beta.size());
    v -= v.dot(beta) * beta;
    const double norm = v.norm();
    if (norm > 1e-8) return v / norm;
  }
}

}  // namespace jgap
