#include "jgap/subsets.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_map>

#include "jgap/error.hpp"

namespace jgap {

KSubset::KSubset(std::int64_t n, std::vector<std::int64_t> indices)
    : n_(n), indices_(std::move(indices)) {
  if (n_ < 1) throw Error(Errc::kBadRange, "KSubset: empty ground set");
  if (indices_.empty()) throw Error(Errc::kBadRange, "KSubset: k must be at least 1");
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    if (indices_[i] < 0 || indices_[i] >= n_) {
      throw Error(Errc::kBadRange, "KSubset: index " + std::to_string(indices_[i]) +
                                       " outside [0, " + std::to_string(n_) + ")");
    }
    if (i > 0 && indices_[i] <= indices_[i - 1]) {
      throw Error(Errc::kBadRange, "KSubset: indices must be strictly increasing");
    }
  }
}

KSubset sample_ksubset(std::int64_t n, std::int64_t k, Rng& rng) {
  if (k < 1 || k > n) throw Error(Errc::kBadRange, "sample_ksubset: need 1 <= k <= n");
  std::unordered_map<std::int64_t, std::int64_t> displaced;
  displaced.reserve(static_cast<std::size_t>(2 * k));
  auto at = [&](std::int64_t i) {
    const auto it = displaced.find(i);
    return it == displaced.end() ? i : it->second;
  };
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(k));
  for (std::int64_t j = 0; j < k; ++j) {
    std::uniform_int_distribution<std::int64_t> pick(j, n - 1);
    const std::int64_t r = pick(rng);
    const std::int64_t vj = at(j);
    const std::int64_t vr = at(r);
    displaced[r] = vj;
    displaced[j] = vr;
    out.push_back(vr);
  }
  std::sort(out.begin(), out.end());
  return KSubset(n, std::move(out));
}

std::int64_t intersection_size(const KSubset& a, const KSubset& b) {
  if (a.ground() != b.ground()) {
    throw Error(Errc::kMismatchedGround, "intersection_size: ground sets differ");
  }
  const auto x = a.indices();
  const auto y = b.indices();
  std::int64_t count = 0;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < x.size() && j < y.size()) {
    if (x[i] < y[j]) {
      ++i;
    } else if (y[j] < x[i]) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

std::vector<KSubset> find_separated_family(std::int64_t n, std::int64_t k, std::size_t m,
                                           Rng& rng, std::size_t max_attempts) {
  if (m < 1) throw Error(Errc::kBadRange, "find_separated_family: m must be at least 1");
  std::vector<KSubset> family;
  family.reserve(m);
  std::size_t rejections = 0;
  while (family.size() < m) {
    KSubset candidate = sample_ksubset(n, k, rng);
    // |I ∩ J| < k/2  <=>  2 |I ∩ J| < k
    const bool separated = std::all_of(family.begin(), family.end(), [&](const KSubset& kept) {
      return 2 * intersection_size(candidate, kept) < k;
    });
    if (separated) {
      family.push_back(std::move(candidate));
      rejections = 0;
    } else if (++rejections >= max_attempts) {
      throw Error(Errc::kFamilyNotFound,
                  "found " + std::to_string(family.size()) + " of " + std::to_string(m) +
                      " separated subsets before " + std::to_string(max_attempts) +
                      " consecutive rejections; increase n/k or the attempt budget");
    }
  }
  return family;
}

double subset_normalizer(std::int64_t n, std::int64_t k) {
  if (n < 2 || k < 1 || k >= n) {
    throw Error(Errc::kBadRange, "subset_normalizer: need 1 <= k < n");
  }
  return 1.0 / std::sqrt(1.0 - static_cast<double>(k - 1) / static_cast<double>(n - 1));
}

Vector subset_direction(const EquatorFrame& eq, const KSubset& subset) {
  if (subset.ground() != eq.dirs.rows()) {
    throw Error(Errc::kMismatchedGround, "subset_direction: subset ground differs from frame");
  }
  Vector sum = Vector::Zero(eq.dim);
  for (std::int64_t i : subset.indices()) sum += eq.dirs.row(i).transpose();
  const double scale =
      subset_normalizer(subset.ground(), subset.k()) / std::sqrt(static_cast<double>(subset.k()));
  return scale * sum;
}

double direction_separation(const EquatorFrame& eq, const KSubset& a, const KSubset& b) {
  return subset_direction(eq, a).dot(subset_direction(eq, b));
}

double predicted_separation(std::int64_t n, std::int64_t k, std::int64_t overlap) {
  const double c = subset_normalizer(n, k);
  const auto dk = static_cast<double>(k);
  const auto dn1 = static_cast<double>(n - 1);
  return (c * c / dk) * (-dk * dk / dn1 + static_cast<double>(overlap) * (1.0 + 1.0 / dn1));
}

bool separation_regime(std::int64_t n, std::int64_t k) {
  return n >= 100 && k >= 1 && 4 * k <= n + 3;
}

}  // namespace jgap
