#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "jgap/linalg.hpp"
#include "jgap/random.hpp"
#include "jgap/simplex_frame.hpp"

namespace jgap {

/// A k-subset of the ground set {0, ..., n-1}, stored sorted. Indices are
/// zero-based throughout the library and in serialized output.
class KSubset {
 public:
  KSubset(std::int64_t n, std::vector<std::int64_t> indices);

  std::int64_t ground() const { return n_; }
  std::int64_t k() const { return static_cast<std::int64_t>(indices_.size()); }
  std::span<const std::int64_t> indices() const { return indices_; }

  friend bool operator==(const KSubset&, const KSubset&) = default;

 private:
  std::int64_t n_;
  std::vector<std::int64_t> indices_;
};

/// Uniform k-subset by partial Fisher-Yates over an implicit identity
/// permutation (only displaced entries are stored), O(k) memory.
KSubset sample_ksubset(std::int64_t n, std::int64_t k, Rng& rng);

std::int64_t intersection_size(const KSubset& a, const KSubset& b);

/// Greedy rejection sampling: draws candidates and keeps those whose overlap
/// with every kept subset is below k/2. Throws FamilyNotFound after
/// `max_attempts` consecutive rejections.
std::vector<KSubset> find_separated_family(std::int64_t n, std::int64_t k, std::size_t m,
                                           Rng& rng, std::size_t max_attempts = 100000);

/// c_{n,k} = 1 / sqrt(1 - (k-1)/(n-1)), the normalizer of a sum of k
/// equatorial directions.
double subset_normalizer(std::int64_t n, std::int64_t k);

/// v_I = (c_{n,k} / sqrt(k)) * sum_{i in I} v_i.
Vector subset_direction(const EquatorFrame& eq, const KSubset& subset);

/// <v_I, v_J> computed from the vectors.
double direction_separation(const EquatorFrame& eq, const KSubset& a, const KSubset& b);

/// (c^2_{n,k} / k) (-k^2/(n-1) + overlap (1 + 1/(n-1))), the closed form of
/// <v_I, v_J> for |I ∩ J| = overlap.
double predicted_separation(std::int64_t n, std::int64_t k, std::int64_t overlap);

/// True iff k <= (n+3)/4 and n >= 100, where separated pairs satisfy
/// <v_I, v_J> <= 3/4.
bool separation_regime(std::int64_t n, std::int64_t k);

}  // namespace jgap
