#include "jgap/hypergeometric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "jgap/error.hpp"

namespace jgap {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr std::int64_t kProductLimit = 4096;

void check_nk(std::int64_t n, std::int64_t k) {
  if (n < 1 || k < 1 || k > n) {
    throw Error(Errc::kBadRange, "hypergeometric: need 1 <= k <= n (n=" + std::to_string(n) +
                                     ", k=" + std::to_string(k) + ")");
  }
}

}  // namespace

double log_choose(std::int64_t a, std::int64_t b) {
  if (b < 0 || a < 0 || b > a) return kNegInf;
  const std::int64_t s = std::min(b, a - b);
  if (s == 0) return 0.0;
  if (s <= kProductLimit) {
    // C(a, s) = prod_{i=1..s} (a - s + i) / i
    double acc = 0.0;
    double comp = 0.0;
    for (std::int64_t i = 1; i <= s; ++i) {
      const double term = std::log1p(static_cast<double>(a - s) / static_cast<double>(i));
      const double y = term - comp;
      const double t = acc + y;
      comp = (t - acc) - y;
      acc = t;
    }
    return acc;
  }
  const auto da = static_cast<double>(a);
  const auto ds = static_cast<double>(s);
  return std::lgamma(da + 1.0) - std::lgamma(ds + 1.0) - std::lgamma(da - ds + 1.0);
}

double log_point_mass(std::int64_t n, std::int64_t k, std::int64_t l) {
  check_nk(n, k);
  if (l < 0 || l > k) throw Error(Errc::kBadRange, "point mass: need 0 <= l <= k");
  if (k - l > n - k) return kNegInf;
  return log_choose(k, l) + log_choose(n - k, k - l) - log_choose(n, k);
}

double exact_point_mass(std::int64_t n, std::int64_t k, std::int64_t l) {
  return std::exp(log_point_mass(n, k, l));
}

double log_exact_tail(std::int64_t n, std::int64_t k, std::int64_t t) {
  check_nk(n, k);
  if (t < 0) throw Error(Errc::kBadRange, "exact_tail: need t >= 0");
  const std::int64_t lo = std::max<std::int64_t>(t, std::max<std::int64_t>(0, 2 * k - n));
  if (t == 0) return 0.0;
  if (lo > k) return kNegInf;

  std::vector<double> logs;
  logs.reserve(static_cast<std::size_t>(k - lo + 1));
  for (std::int64_t l = lo; l <= k; ++l) {
    const double v = log_point_mass(n, k, l);
    if (v != kNegInf) logs.push_back(v);
  }
  if (logs.empty()) return kNegInf;
  const double peak = *std::max_element(logs.begin(), logs.end());
  std::vector<double> terms;
  terms.reserve(logs.size());
  for (double v : logs) terms.push_back(std::exp(v - peak));
  std::sort(terms.begin(), terms.end());

  double sum = 0.0;
  double comp = 0.0;
  for (double x : terms) {
    const double s = sum + x;
    comp += std::abs(sum) >= std::abs(x) ? (sum - s) + x : (x - s) + sum;
    sum = s;
  }
  return std::min(0.0, peak + std::log(sum + comp));
}

double exact_tail(std::int64_t n, std::int64_t k, std::int64_t t) {
  return std::exp(log_exact_tail(n, k, t));
}

bool tail_regime(std::int64_t n, std::int64_t k) {
  const double upper = static_cast<double>(n) / (2.0 * std::exp(8.0));
  return k > 100 && static_cast<double>(k) < upper;
}

TailReport tail_comparison(std::int64_t n, std::int64_t k) {
  check_nk(n, k);
  TailReport report;
  report.n = n;
  report.k = k;
  report.t = (k + 1) / 2;
  report.exact_tail_log = log_exact_tail(n, k, report.t);
  report.bound_log = (static_cast<double>(k) / 5.0) *
                     std::log(2.0 * static_cast<double>(k) / static_cast<double>(n));
  report.satisfied = report.exact_tail_log <= report.bound_log;
  return report;
}

TailReport tail_bound_check(std::int64_t n, std::int64_t k) {
  if (!tail_regime(n, k)) {
    throw Error(Errc::kOutOfRegime, "tail bound needs 100 < k < n/(2e^8) (n=" +
                                        std::to_string(n) + ", k=" + std::to_string(k) + ")");
  }
  return tail_comparison(n, k);
}

}  // namespace jgap
