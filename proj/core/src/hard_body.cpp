#include "jgap/hard_body.hpp"

#include <cmath>
#include <string>

#include "jgap/error.hpp"
#include "jgap/hypergeometric.hpp"
#include "jgap/lift.hpp"

namespace jgap {
namespace {

const double kE4 = std::exp(4.0);

}  // namespace

double c_prime_constant() {
  const double c0 = c0_constant();
  return 1.0 / (720.0 * c0 * c0);
}

double c1_constant() {
  return std::min({1.0, std::sqrt(c_prime_constant() / 8.0), 1.0 / (60.0 * c0_constant())});
}

Admissibility admissibility(std::int64_t n, std::int64_t k, double R) {
  const auto dn = static_cast<double>(n);
  const double c0 = c0_constant();
  Admissibility a;
  a.tail_regime = tail_regime(n, k);
  a.separation_regime = separation_regime(n, k);
  a.ratio_window = std::sqrt(2.0) * kE4 / (6.0 * c0) * std::sqrt(dn) <= R && R <= dn / (60.0 * c0);
  a.above_sqrt_en = R > std::sqrt(std::exp(1.0) * dn);
  a.below_c1_n = R <= c1_constant() * dn;
  return a;
}

HardBodyParams derive_params(std::int64_t n, double R, std::size_t m_max, std::uint64_t seed) {
  if (n < 3) throw Error(Errc::kDimensionTooSmall, "derive_params: n must be at least 3");
  if (!(R > 0.0)) throw Error(Errc::kBadRange, "derive_params: R must be positive");
  const auto dn = static_cast<double>(n);
  const double root = dn / (6.0 * c0_constant() * R);
  const double k_real = root * root;
  const auto k = static_cast<std::int64_t>(std::floor(k_real + 0.5));
  if (k < 1) {
    throw Error(Errc::kDegenerateK, "derive_params: (n/(6 C0 R))^2 = " + std::to_string(k_real) +
                                        " rounds to 0; R is too large for n");
  }
  if (k >= n) throw Error(Errc::kBadRange, "derive_params: k must be below n; R is too small");

  HardBodyParams p;
  p.n = n;
  p.k = k;
  p.R_requested = R;
  p.R = dn / (6.0 * c0_constant() * std::sqrt(static_cast<double>(k)));
  p.seed = seed;

  const FacetCount fc = facet_count_for(n, k, m_max);
  p.m = fc.m;
  p.m_capped = fc.capped;
  p.admissible = admissibility(n, k, p.R);
  return p;
}

FacetCount facet_count_for(std::int64_t n, std::int64_t k, std::size_t m_max) {
  if (k < 1 || k >= n) throw Error(Errc::kBadRange, "facet_count_for: need 1 <= k < n");
  if (m_max < 1) throw Error(Errc::kBadRange, "facet_count_for: m_max must be positive");
  const double log_m = (static_cast<double>(k) / 20.0) *
                       std::log(static_cast<double>(n) / (2.0 * static_cast<double>(k)));
  FacetCount fc;
  if (log_m >= std::log(static_cast<double>(m_max))) {
    fc.m = m_max;
    fc.capped = true;
  } else {
    fc.m = std::max<std::size_t>(1, static_cast<std::size_t>(std::floor(std::exp(log_m) + 1e-9)));
  }
  return fc;
}

HardBodyParams params_from_k(std::int64_t n, std::int64_t k, std::size_t m, std::uint64_t seed) {
  if (n < 3) throw Error(Errc::kDimensionTooSmall, "params_from_k: n must be at least 3");
  if (k < 1 || k >= n) throw Error(Errc::kBadRange, "params_from_k: need 1 <= k < n");
  if (m < 1) throw Error(Errc::kBadRange, "params_from_k: m must be at least 1");
  HardBodyParams p;
  p.n = n;
  p.k = k;
  p.m = m;
  p.R = static_cast<double>(n) / (6.0 * c0_constant() * std::sqrt(static_cast<double>(k)));
  p.R_requested = p.R;
  p.seed = seed;
  p.admissible = admissibility(n, k, p.R);
  return p;
}

HPolytope HardBodyInstance::body() const {
  const Eigen::Index simplex_rows = frame->contacts.rows();
  Matrix normals(simplex_rows + facet_dirs.rows(), frame->dim);
  normals.topRows(simplex_rows) = frame->contacts;
  normals.bottomRows(facet_dirs.rows()) = facet_dirs;
  return HPolytope(std::move(normals), Vector::Ones(simplex_rows + facet_dirs.rows()));
}

HardBodyInstance assemble_instance(const HardBodyParams& params, std::vector<KSubset> subsets) {
  HardBodyInstance inst;
  inst.params = params;
  inst.frame = std::make_shared<const SimplexFrame>(build_simplex(params.n));
  inst.equator = equator_frame(*inst.frame);
  inst.subsets = std::move(subsets);

  const auto m = static_cast<Eigen::Index>(inst.subsets.size());
  const double c0 = c0_constant();
  inst.facet_dirs.resize(m, params.n);
  inst.witnesses.resize(m, params.n);
  for (Eigen::Index i = 0; i < m; ++i) {
    const Vector v = subset_direction(inst.equator, inst.subsets[static_cast<std::size_t>(i)]);
    inst.facet_dirs.row(i) = lift_up(v, inst.equator.beta).transpose();
    inst.witnesses.row(i) = (c0 * lift_down(v, inst.equator.beta)).transpose();
  }
  return inst;
}

HardBodyInstance build_instance(const HardBodyParams& params, std::size_t max_attempts) {
  Rng rng = make_stream(params.seed);
  std::vector<KSubset> family = find_separated_family(params.n, params.k, params.m, rng, max_attempts);
  return assemble_instance(params, std::move(family));
}

Certificate extract_certificate(const HardBodyInstance& inst) {
  Certificate cert;
  cert.witnesses = inst.witnesses;
  cert.facet_dirs = inst.facet_dirs;
  cert.polar_generators = std::shared_ptr<const Matrix>(inst.frame, &inst.frame->contacts);
  cert.polar_family = PolarFamily::kSimplexContacts;
  cert.R = inst.params.R;
  cert.threshold = 1.0 / (2.0 * inst.params.R);
  return cert;
}

TheoremBound theorem_bound(double n, double R) {
  // The boundary R = sqrt(e n) itself is accepted up to rounding.
  if (!(n > 0.0) || !(R >= std::sqrt(std::exp(1.0) * n) * (1.0 - 1e-12))) {
    throw Error(Errc::kOutOfRegime, "theorem_bound: needs R > sqrt(e n)");
  }
  const double c0 = c0_constant();
  const double root = n / (6.0 * c0 * R);
  TheoremBound out;
  out.log_facets = -std::log(2.0 * R) + std::log(18.0 * c0 * c0 * R * R / n) * root * root / 20.0;
  out.log_simplified =
      c_prime_constant() * std::log(R * R / n) * n * n / (R * R) - std::log(2.0 * n);
  return out;
}

double theorem_exponent_derivative(double n, double R) {
  return -(2.0 * n * n / (R * R * R)) * (std::log(R * R / n) - 1.0);
}

}  // namespace jgap
