#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include "jgap/certificate.hpp"
#include "jgap/linalg.hpp"
#include "jgap/polytope.hpp"
#include "jgap/simplex_frame.hpp"
#include "jgap/subsets.hpp"

namespace jgap {

/// Which hypotheses of the asymptotic argument a parameter set meets. These
/// are reported only; construction never requires them.
struct Admissibility {
  bool tail_regime = false;        ///< 100 < k < n/(2e^8)
  bool separation_regime = false;  ///< k <= (n+3)/4 and n >= 100
  bool ratio_window = false;       ///< sqrt(2) e^4 / (6 C0) sqrt(n) <= R <= n / (60 C0)
  bool above_sqrt_en = false;      ///< R > sqrt(e n)
  bool below_c1_n = false;         ///< R <= c1 n
};

struct HardBodyParams {
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::size_t m = 0;
  double R_requested = 0.0;  ///< ratio asked for (equals R when k was given)
  double R = 0.0;            ///< realized ratio n / (6 C0 sqrt(k))
  std::uint64_t seed = 0;
  bool m_capped = false;
  Admissibility admissible;
};

inline constexpr std::size_t kDefaultMaxFacets = 100000;

/// k = round((n / (6 C0 R))^2), m = floor((n/(2k))^{k/20}) capped at m_max.
/// Throws DegenerateK when k rounds to 0.
HardBodyParams derive_params(std::int64_t n, double R, std::size_t m_max = kDefaultMaxFacets,
                             std::uint64_t seed = 0);

struct FacetCount {
  std::size_t m = 0;
  bool capped = false;
};

/// floor((n/(2k))^{k/20}), at least 1 and at most m_max, evaluated in log space.
FacetCount facet_count_for(std::int64_t n, std::int64_t k, std::size_t m_max = kDefaultMaxFacets);

/// Parameters with k and m fixed directly; R is the realized ratio.
HardBodyParams params_from_k(std::int64_t n, std::int64_t k, std::size_t m, std::uint64_t seed);

Admissibility admissibility(std::int64_t n, std::int64_t k, double R);

/// c1 = min{1, sqrt(C'/8), 1/(60 C0)} with C' = 1/(720 C0^2).
double c1_constant();
double c_prime_constant();

/// K = Δ_n ∩ {<x, y_i> <= 1}, y_i = up(v_{I_i}), with witnesses
/// x_i = C0 down(v_{I_i}).
struct HardBodyInstance {
  HardBodyParams params;
  std::shared_ptr<const SimplexFrame> frame;
  EquatorFrame equator;
  std::vector<KSubset> subsets;
  Matrix facet_dirs;  ///< y_i as rows
  Matrix witnesses;   ///< x_i as rows

  /// Simplex rows followed by the m facet rows, all offsets 1.
  HPolytope body() const;
};

HardBodyInstance build_instance(const HardBodyParams& params, std::size_t max_attempts = 100000);

/// Assembles an instance from stored subsets (no sampling).
HardBodyInstance assemble_instance(const HardBodyParams& params, std::vector<KSubset> subsets);

Certificate extract_certificate(const HardBodyInstance& inst);

struct TheoremBound {
  double log_facets = 0.0;     ///< log(m/(2R)) with the uncapped m
  double log_simplified = 0.0; ///< C' log(R^2/n) n^2/R^2 - log(2n)
};

/// Throws OutOfRegime unless R >= sqrt(e n) (relative slack 1e-12).
TheoremBound theorem_bound(double n, double R);

/// d/dR [log(R^2/n) n^2/R^2] = -(2 n^2/R^3)(log(R^2/n) - 1).
double theorem_exponent_derivative(double n, double R);

}  // namespace jgap
