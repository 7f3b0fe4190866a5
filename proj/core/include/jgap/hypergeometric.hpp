#pragma once

#include <cstdint>

namespace jgap {

/// Overlap law of two independent uniform k-subsets of [n]:
///   P(|I ∩ J| = l) = C(k, l) C(n-k, k-l) / C(n, k).
/// Everything is evaluated in log space; `log_*` variants return -inf for
/// zero probability.

/// log C(a, b); exact-product summation for small min(b, a-b), lgamma otherwise.
double log_choose(std::int64_t a, std::int64_t b);

double log_point_mass(std::int64_t n, std::int64_t k, std::int64_t l);
double exact_point_mass(std::int64_t n, std::int64_t k, std::int64_t l);

/// log P(|I ∩ J| >= t); the terms are summed smallest first with Neumaier
/// compensation, so tails far below the double range stay representable.
double log_exact_tail(std::int64_t n, std::int64_t k, std::int64_t t);
double exact_tail(std::int64_t n, std::int64_t k, std::int64_t t);

struct TailReport {
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::int64_t t = 0;           ///< ceil(k / 2)
  double exact_tail_log = 0.0;  ///< log P(|I ∩ J| >= t)
  double bound_log = 0.0;       ///< (k / 5) log(2k / n)
  bool satisfied = false;       ///< exact_tail_log <= bound_log
};

/// True iff 100 < k < n / (2 e^8).
bool tail_regime(std::int64_t n, std::int64_t k);

/// Compares the exact tail at ceil(k/2) with (2k/n)^{k/5}. Throws OutOfRegime
/// outside 100 < k < n/(2e^8).
TailReport tail_bound_check(std::int64_t n, std::int64_t k);

/// Same comparison without the regime gate (used for reporting sweeps).
TailReport tail_comparison(std::int64_t n, std::int64_t k);

}  // namespace jgap
