#include "jgap/polytope.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "jgap/error.hpp"
#include "jgap/parallel.hpp"

namespace jgap {

HPolytope::HPolytope(Matrix normals, Vector offsets)
    : normals_(std::move(normals)), offsets_(std::move(offsets)) {
  if (normals_.rows() != offsets_.size()) {
    throw Error(Errc::kDimensionMismatch, "HPolytope: normals and offsets disagree in count");
  }
  if (normals_.cols() < 1) throw Error(Errc::kDimensionMismatch, "HPolytope: empty dimension");
  if (!normals_.allFinite() || !offsets_.allFinite()) {
    throw Error(Errc::kDegenerateInput, "HPolytope: non-finite entry");
  }
  for (Eigen::Index i = 0; i < normals_.rows(); ++i) {
    if (normals_.row(i).squaredNorm() == 0.0) {
      throw Error(Errc::kDegenerateInput, "HPolytope: zero normal in row " + std::to_string(i));
    }
  }
}

bool HPolytope::origin_interior() const {
  return offsets_.size() > 0 && offsets_.minCoeff() > 0.0;
}

HPolytope HPolytope::scaled(double s) const {
  return HPolytope(normals_, offsets_ * s);
}

HPolytope HPolytope::without_facet(Eigen::Index i) const {
  if (i < 0 || i >= num_facets()) throw Error(Errc::kBadRange, "without_facet: index");
  Matrix a(num_facets() - 1, dim());
  Vector b(num_facets() - 1);
  a.topRows(i) = normals_.topRows(i);
  b.head(i) = offsets_.head(i);
  a.bottomRows(num_facets() - 1 - i) = normals_.bottomRows(num_facets() - 1 - i);
  b.tail(num_facets() - 1 - i) = offsets_.tail(num_facets() - 1 - i);
  return HPolytope(std::move(a), std::move(b));
}

HPolytope intersect(const HPolytope& a, const HPolytope& b) {
  if (a.dim() != b.dim()) throw Error(Errc::kDimensionMismatch, "intersect: dimensions differ");
  Matrix normals(a.num_facets() + b.num_facets(), a.dim());
  Vector offsets(normals.rows());
  normals.topRows(a.num_facets()) = a.normals_;
  normals.bottomRows(b.num_facets()) = b.normals_;
  offsets.head(a.num_facets()) = a.offsets_;
  offsets.tail(b.num_facets()) = b.offsets_;
  return HPolytope(std::move(normals), std::move(offsets));
}

HPolytope box(const Vector& half_widths) {
  const Eigen::Index n = half_widths.size();
  Matrix normals = Matrix::Zero(2 * n, n);
  Vector offsets(2 * n);
  for (Eigen::Index i = 0; i < n; ++i) {
    normals(2 * i, i) = 1.0;
    normals(2 * i + 1, i) = -1.0;
    offsets[2 * i] = half_widths[i];
    offsets[2 * i + 1] = half_widths[i];
  }
  return HPolytope(std::move(normals), std::move(offsets));
}

ConvexCoefficients::ConvexCoefficients(Vector lambda) : lambda_(std::move(lambda)) {
  if (lambda_.size() == 0) throw Error(Errc::kBadRange, "ConvexCoefficients: empty");
  if (lambda_.minCoeff() < -1e-12) {
    throw Error(Errc::kBadRange, "ConvexCoefficients: negative weight");
  }
  if (std::abs(lambda_.sum() - 1.0) > 1e-9) {
    throw Error(Errc::kBadRange, "ConvexCoefficients: weights do not sum to 1");
  }
}

double support_value(const HPolytope& K, const Vector& d, const lp::Options& options) {
  if (d.size() != K.dim()) throw Error(Errc::kDimensionMismatch, "support_value: direction");
  const lp::InequalityResult res =
      lp::maximize(K.normals(), K.offsets(), d, lp::Sign::kFree, options);
  switch (res.status) {
    case lp::Status::kOptimal: return res.objective;
    case lp::Status::kUnbounded: throw Error(Errc::kUnbounded, "support_value: direction recedes");
    case lp::Status::kInfeasible: throw Error(Errc::kInfeasible, "support_value: empty polytope");
    case lp::Status::kIterationLimit: break;
  }
  throw Error(Errc::kIterationLimit, "support_value: simplex iteration limit");
}

double radial_value(const HPolytope& K, const Vector& d) {
  if (d.size() != K.dim()) throw Error(Errc::kDimensionMismatch, "radial_value: direction");
  if (d.squaredNorm() == 0.0) throw Error(Errc::kZeroDirection, "radial_value: d = 0");
  if (!K.origin_interior()) {
    throw Error(Errc::kOriginNotInterior, "radial_value: offsets must be positive");
  }
  const Vector ad = K.normals() * d;
  double rho = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < ad.size(); ++i) {
    if (ad[i] > 0.0) rho = std::min(rho, K.offset(i) / ad[i]);
  }
  return rho;
}

bool contains(const HPolytope& K, const Vector& x, double tol) {
  if (x.size() != K.dim()) throw Error(Errc::kDimensionMismatch, "contains: point");
  const Vector slack = K.normals() * x - K.offsets();
  return slack.size() == 0 || slack.maxCoeff() <= tol;
}

Matrix polar_vertices(const HPolytope& K) {
  for (Eigen::Index i = 0; i < K.num_facets(); ++i) {
    if (K.offset(i) != 1.0) {
      throw Error(Errc::kNonUnitOffsets, "polar_vertices: row " + std::to_string(i));
    }
  }
  return K.normals();
}

InclusionReport inclusion_check(const HPolytope& inner, const HPolytope& outer, double scale,
                                const InclusionOptions& options) {
  if (inner.dim() != outer.dim()) {
    throw Error(Errc::kDimensionMismatch, "inclusion_check: dimensions differ");
  }
  const auto facets = static_cast<std::size_t>(outer.num_facets());
  const std::size_t chunks = chunk_count(facets, options.threads);
  std::vector<InclusionReport> partial(chunks);

  parallel_chunks(facets, options.threads, [&](std::size_t begin, std::size_t end, std::size_t c) {
    InclusionReport local;
    local.worst_margin = -std::numeric_limits<double>::infinity();
    for (std::size_t f = begin; f < end; ++f) {
      const auto j = static_cast<Eigen::Index>(f);
      const Vector a = outer.normal(j).transpose();
      const double margin = support_value(inner, a, options.lp) - scale * outer.offset(j);
      if (margin > local.worst_margin) {
        local.worst_margin = margin;
        local.worst_facet = j;
      }
    }
    partial[c] = local;
  });

  InclusionReport report;
  report.worst_margin = -std::numeric_limits<double>::infinity();
  for (const auto& p : partial) {
    if (p.worst_facet >= 0 && p.worst_margin > report.worst_margin) {
      report.worst_margin = p.worst_margin;
      report.worst_facet = p.worst_facet;
    }
  }
  report.holds = report.worst_margin <= options.tol;
  return report;
}

ConvexCoefficients polar_decompose(const Matrix& generators, const Vector& w,
                                   const lp::Options& options) {
  if (generators.cols() != w.size()) {
    throw Error(Errc::kDimensionMismatch, "polar_decompose: generator dimension");
  }
  const Eigen::Index n = w.size();
  const Eigen::Index count = generators.rows();
  Matrix M(n + 1, count);
  M.topRows(n) = generators.transpose();
  M.row(n).setOnes();
  Vector r(n + 1);
  r.head(n) = w;
  r[n] = 1.0;

  const lp::StandardResult res = lp::solve_standard(M, r, Vector::Zero(count), options);
  if (res.status != lp::Status::kOptimal) {
    throw Error(Errc::kNotInHull, "polar_decompose: point is outside the convex hull");
  }
  Vector lambda = res.primal.cwiseMax(0.0);
  const double total = lambda.sum();
  if (total <= 0.0) throw Error(Errc::kNotInHull, "polar_decompose: degenerate solution");
  lambda /= total;
  const double residual = (generators.transpose() * lambda - w).lpNorm<Eigen::Infinity>();
  if (residual > 1e-7) {
    throw Error(Errc::kNotInHull, "polar_decompose: residual " + std::to_string(residual));
  }
  return ConvexCoefficients(std::move(lambda));
}

}  // namespace jgap
