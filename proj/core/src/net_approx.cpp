#include "jgap/net_approx.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "jgap/error.hpp"
#include "jgap/parallel.hpp"

namespace jgap {
namespace {

constexpr double kPi = std::numbers::pi;

Matrix circle_grid(double eps) {
  const auto count = static_cast<Eigen::Index>(std::ceil(2.0 * kPi / eps));
  Matrix pts(count, 2);
  for (Eigen::Index i = 0; i < count; ++i) {
    const double angle = 2.0 * kPi * static_cast<double>(i) / static_cast<double>(count);
    pts(i, 0) = std::cos(angle);
    pts(i, 1) = std::sin(angle);
  }
  return pts;
}

// A point at polar angle phi in band j is within phi-step/2 of the band's
// center latitude and within pi sin(phi_j) / N_j of a grid point along it;
// both terms are <= eps/2, and chord <= arc.
Matrix sphere_grid(double eps) {
  const auto bands = static_cast<Eigen::Index>(std::ceil(kPi / eps));
  const double step = kPi / static_cast<double>(bands);
  std::vector<Eigen::Index> per_band(static_cast<std::size_t>(bands));
  Eigen::Index total = 0;
  for (Eigen::Index j = 0; j < bands; ++j) {
    const double phi = (static_cast<double>(j) + 0.5) * step;
    const auto count = std::max<Eigen::Index>(
        1, static_cast<Eigen::Index>(std::ceil(2.0 * kPi * std::sin(phi) / eps)));
    per_band[static_cast<std::size_t>(j)] = count;
    total += count;
  }
  Matrix pts(total, 3);
  Eigen::Index row = 0;
  for (Eigen::Index j = 0; j < bands; ++j) {
    const double phi = (static_cast<double>(j) + 0.5) * step;
    const Eigen::Index count = per_band[static_cast<std::size_t>(j)];
    for (Eigen::Index i = 0; i < count; ++i) {
      const double lambda = 2.0 * kPi * static_cast<double>(i) / static_cast<double>(count);
      pts(row, 0) = std::sin(phi) * std::cos(lambda);
      pts(row, 1) = std::sin(phi) * std::sin(lambda);
      pts(row, 2) = std::cos(phi);
      ++row;
    }
  }
  return pts;
}

Matrix random_points(Eigen::Index n, std::size_t count, Rng& rng) {
  Matrix pts(static_cast<Eigen::Index>(count), n);
  for (Eigen::Index i = 0; i < pts.rows(); ++i) pts.row(i) = random_unit_vector(rng, n).transpose();
  return pts;
}

}  // namespace

std::string_view strategy_name(NetStrategy s) {
  return s == NetStrategy::kGrid ? "grid" : "random";
}

double empirical_covering_gap(const SphericalNet& net, std::size_t tests, Rng& rng) {
  double worst = 0.0;
  for (std::size_t t = 0; t < tests; ++t) {
    const Vector dir = random_unit_vector(rng, net.dim);
    const double best = (net.points * dir).maxCoeff();
    worst = std::max(worst, std::sqrt(std::max(0.0, 2.0 - 2.0 * best)));
  }
  return worst;
}

SphericalNet build_net(Eigen::Index n, double eps, NetStrategy strategy, Rng* rng,
                       std::size_t max_points) {
  if (n < 2) throw Error(Errc::kDimensionTooSmall, "build_net: n must be at least 2");
  if (!(eps > 0.0)) throw Error(Errc::kBadRange, "build_net: eps must be positive");

  SphericalNet net;
  net.dim = n;
  net.mesh = eps;
  net.strategy = strategy;

  if (strategy == NetStrategy::kGrid) {
    if (n > 3) {
      throw Error(Errc::kStrategyUnavailable, "build_net: grid nets exist only for n <= 3");
    }
    net.points = n == 2 ? circle_grid(eps) : sphere_grid(eps);
    net.certified = true;
    return net;
  }

  if (rng == nullptr) throw Error(Errc::kBadRange, "build_net: random strategy needs a stream");
  if (!(eps < 1.0)) throw Error(Errc::kBadRange, "build_net: random strategy needs eps < 1");
  const double log_count = std::log(std::log(1.0 / eps)) + static_cast<double>(n) * std::log(1.0 / eps);
  if (log_count > std::log(static_cast<double>(max_points))) {
    throw Error(Errc::kBadRange, "build_net: random net would exceed " +
                                     std::to_string(max_points) + " points");
  }
  auto count = static_cast<std::size_t>(std::ceil(std::exp(log_count)));
  constexpr std::size_t kTests = 10000;
  for (;;) {
    net.points = random_points(n, count, *rng);
    net.test_directions = kTests;
    net.empirical_gap = empirical_covering_gap(net, kTests, *rng);
    if (net.empirical_gap < eps || 2 * count > max_points) break;
    count *= 2;
  }
  return net;
}

SupportOracle polytope_support_oracle(const HPolytope& K, double R) {
  SupportOracle oracle;
  oracle.h = [K](const Vector& d) { return support_value(K, d); };
  oracle.lower = 1.0;
  oracle.upper = R;
  return oracle;
}

SupportOracle ball_support_oracle(double radius) {
  SupportOracle oracle;
  oracle.h = [radius](const Vector&) { return radius; };
  oracle.lower = radius;
  oracle.upper = radius;
  return oracle;
}

HPolytope approx_polytope(const SupportOracle& oracle, const SphericalNet& net) {
  if (net.points.rows() == 0) throw Error(Errc::kBadRange, "approx_polytope: empty net");
  Vector offsets(net.points.rows());
  for (Eigen::Index i = 0; i < net.points.rows(); ++i) {
    const double h = oracle.h(net.points.row(i).transpose());
    if (!(h >= oracle.lower - 1e-9 && h <= oracle.upper + 1e-9)) {
      throw Error(Errc::kOracleRangeViolation,
                  "approx_polytope: h = " + std::to_string(h) + " outside [" +
                      std::to_string(oracle.lower) + ", " + std::to_string(oracle.upper) + "]");
    }
    offsets[i] = h;
  }
  return HPolytope(net.points, std::move(offsets));
}

SandwichReport sandwich_check(const HPolytope& K, const HPolytope& P, double delta,
                              const SandwichOptions& options) {
  if (!(delta > 0.0 && delta < 1.0)) throw Error(Errc::kBadRange, "sandwich_check: delta in (0,1)");
  if (!K.origin_interior() || !P.origin_interior()) {
    throw Error(Errc::kOriginNotInterior, "sandwich_check: both bodies must contain 0");
  }
  InclusionOptions inc;
  inc.tol = options.tol;
  inc.threads = options.threads;

  SandwichReport report;
  const InclusionReport outer = inclusion_check(K, P, 1.0, inc);
  report.outer_ok = outer.holds;
  report.outer_margin = outer.worst_margin;
  report.outer_facet = outer.worst_facet;

  // (1 - delta) P ⊂ K  <=>  P ⊂ K / (1 - delta)
  const InclusionReport inner = inclusion_check(P, K, 1.0 / (1.0 - delta), inc);
  report.inner_ok = inner.holds;
  report.inner_margin = inner.worst_margin;
  report.inner_facet = inner.worst_facet;
  return report;
}

LipschitzReport lipschitz_audit(const SupportOracle& oracle, Eigen::Index n, std::size_t trials,
                                Rng& rng) {
  if (trials < 1) throw Error(Errc::kBadRange, "lipschitz_audit: trials must be positive");
  std::uniform_real_distribution<double> spread(1e-3, 0.3);
  LipschitzReport report;
  report.trials = trials;
  for (std::size_t t = 0; t < trials; ++t) {
    const Vector a = random_unit_vector(rng, n);
    Vector b;
    if (t % 2 == 0) {
      b = random_unit_vector(rng, n);
    } else {
      b = a + spread(rng) * random_unit_vector(rng, n);
      b.normalize();
    }
    const double dist = (a - b).norm();
    if (dist < 1e-12) continue;
    report.worst_ratio = std::max(report.worst_ratio, std::abs(oracle.h(a) - oracle.h(b)) / dist);
  }
  return report;
}

double bound_exponent(std::size_t net_size, Eigen::Index n, double R, double delta) {
  return std::log(static_cast<double>(net_size)) /
         (static_cast<double>(n) * std::log(2.0 * R / delta));
}

HPolytope random_body(Eigen::Index n, double R, std::size_t rows, Rng& rng) {
  if (n < 2) throw Error(Errc::kDimensionTooSmall, "random_body: n must be at least 2");
  if (!(R > 1.0)) throw Error(Errc::kBadRange, "random_body: R must exceed 1");

  Matrix bound_normals;
  Vector bound_offsets;
  if (n <= 3) {
    // A mesh-s net has every unit u within angle acos(1 - s^2/2) of a normal,
    // so offsets R (1 - s^2/2) keep |x| <= R; s is chosen so they stay >= 1.
    const double s = std::min(0.5, 0.99 * std::sqrt(2.0 * (1.0 - 1.0 / R)));
    bound_normals = build_net(n, s, NetStrategy::kGrid).points;
    bound_offsets = Vector::Constant(bound_normals.rows(), R * (1.0 - 0.5 * s * s));
  } else {
    const double half = R / std::sqrt(static_cast<double>(n));
    if (half < 1.0) {
      throw Error(Errc::kBadRange, "random_body: n > 3 needs R >= sqrt(n)");
    }
    const HPolytope cube = box(Vector::Constant(n, half));
    bound_normals = cube.normals();
    bound_offsets = cube.offsets();
  }

  std::uniform_real_distribution<double> offset(1.0, R);
  Matrix normals(static_cast<Eigen::Index>(rows) + bound_normals.rows(), n);
  Vector offsets(normals.rows());
  for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(rows); ++i) {
    normals.row(i) = random_unit_vector(rng, n).transpose();
    offsets[i] = offset(rng);
  }
  normals.bottomRows(bound_normals.rows()) = bound_normals;
  offsets.tail(bound_normals.rows()) = bound_offsets;
  return HPolytope(std::move(normals), std::move(offsets));
}

}  // namespace jgap
