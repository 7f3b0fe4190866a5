#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <string_view>

#include "jgap/linalg.hpp"
#include "jgap/polytope.hpp"
#include "jgap/random.hpp"

namespace jgap {

enum class NetStrategy { kGrid, kRandom };

std::string_view strategy_name(NetStrategy s);

/// Finite subset of S^{n-1} meant to be an eps-net (every unit vector within
/// Euclidean distance eps of some point).
struct SphericalNet {
  Eigen::Index dim = 0;
  Matrix points;
  double mesh = 0.0;
  NetStrategy strategy = NetStrategy::kGrid;
  /// Grid nets carry an analytic covering proof.
  bool certified = false;
  /// Largest distance from a test direction to the net; NaN when not measured.
  double empirical_gap = std::numeric_limits<double>::quiet_NaN();
  std::size_t test_directions = 0;
};

/// Random nets start from ceil(log(1/eps) (1/eps)^n) points and double until
/// 10^4 test directions are all within eps (at most `max_points`).
inline constexpr std::size_t kMaxNetPoints = 4000000;

/// Grid: n = 2 uses ceil(2 pi / eps) equally spaced angles; n = 3 uses
/// latitude bands of width <= eps with longitudinal spacing chosen so the
/// along-band gap is <= eps/2. Grid at n > 3 throws StrategyUnavailable.
SphericalNet build_net(Eigen::Index n, double eps, NetStrategy strategy, Rng* rng = nullptr,
                       std::size_t max_points = kMaxNetPoints);

/// Max over `tests` random directions of the distance to the nearest net point.
double empirical_covering_gap(const SphericalNet& net, std::size_t tests, Rng& rng);

/// A support function on the sphere with declared range [lower, upper]
/// (upper doubles as the Lipschitz constant).
struct SupportOracle {
  std::function<double(const Vector&)> h;
  double lower = 1.0;
  double upper = 1.0;
};

SupportOracle polytope_support_oracle(const HPolytope& K, double R);
/// h = radius on the sphere.
SupportOracle ball_support_oracle(double radius = 1.0);

/// P = {x : <alpha, x> <= h(alpha) for alpha in net}. Throws
/// OracleRangeViolation if some h(alpha) leaves [lower - 1e-9, upper + 1e-9].
HPolytope approx_polytope(const SupportOracle& oracle, const SphericalNet& net);

struct SandwichOptions {
  double tol = 1e-7;
  unsigned threads = 1;
};

struct SandwichReport {
  bool outer_ok = false;       ///< K ⊂ P
  bool inner_ok = false;       ///< (1 - delta) P ⊂ K
  double outer_margin = 0.0;   ///< max_facets(P) h_K(a) - b
  double inner_margin = 0.0;   ///< max_facets(K) h_P(y) - b / (1 - delta)
  Eigen::Index outer_facet = -1;
  Eigen::Index inner_facet = -1;
};

SandwichReport sandwich_check(const HPolytope& K, const HPolytope& P, double delta,
                              const SandwichOptions& options = {});

struct LipschitzReport {
  double worst_ratio = 0.0;
  std::size_t trials = 0;
};

/// Samples unit pairs (half independent, half at small separation) and reports
/// max |h(a) - h(b)| / |a - b|.
LipschitzReport lipschitz_audit(const SupportOracle& oracle, Eigen::Index n, std::size_t trials,
                                Rng& rng);

/// log|net| / (n log(2R/delta)): the constant c in |net| = exp(c log(2R/delta) n).
double bound_exponent(std::size_t net_size, Eigen::Index n, double R, double delta);

/// Random body with B ⊂ K ⊂ R B: `rows` random unit normals with offsets
/// uniform in [1, R], plus bounding rows on a grid net of mesh 0.5 (n <= 3)
/// or the coordinate cross-polytope directions (n > 3), placed so that every
/// point of K has norm <= R.
HPolytope random_body(Eigen::Index n, double R, std::size_t rows, Rng& rng);

}  // namespace jgap
