#pragma once

#include <cstddef>
#include <vector>

#include "jgap/linalg.hpp"
#include "jgap/lp.hpp"

namespace jgap {

/// Convex polytope {x : <a_i, x> <= b_i}. Rows with zero normals are rejected
/// at construction; duplicate rows are allowed.
class HPolytope {
 public:
  HPolytope() = default;
  HPolytope(Matrix normals, Vector offsets);

  Eigen::Index dim() const { return normals_.cols(); }
  Eigen::Index num_facets() const { return normals_.rows(); }
  const Matrix& normals() const { return normals_; }
  const Vector& offsets() const { return offsets_; }
  auto normal(Eigen::Index i) const { return normals_.row(i); }
  double offset(Eigen::Index i) const { return offsets_[i]; }

  /// True iff every offset is positive, i.e. 0 is an interior point.
  bool origin_interior() const;

  /// {x : <a_i, x> <= s b_i} = s * this, for s > 0.
  HPolytope scaled(double s) const;
  HPolytope without_facet(Eigen::Index i) const;

  /// Rows of `a` followed by rows of `b`.
  friend HPolytope intersect(const HPolytope& a, const HPolytope& b);

 private:
  Matrix normals_;
  Vector offsets_;
};

HPolytope intersect(const HPolytope& a, const HPolytope& b);

/// Axis box {|x_i| <= half_widths_i}.
HPolytope box(const Vector& half_widths);

/// Nonnegative weights summing to one, indexed against a generator list.
class ConvexCoefficients {
 public:
  explicit ConvexCoefficients(Vector lambda);
  const Vector& lambda() const { return lambda_; }
  double operator[](Eigen::Index i) const { return lambda_[i]; }
  Eigen::Index size() const { return lambda_.size(); }

 private:
  Vector lambda_;
};

/// h_K(d) = max <x, d> over K, by linear programming.
double support_value(const HPolytope& K, const Vector& d, const lp::Options& options = {});

/// rho_K(d) = sup{r > 0 : r d in K}; +inf when d is a recession direction.
double radial_value(const HPolytope& K, const Vector& d);

bool contains(const HPolytope& K, const Vector& x, double tol);

/// For K = {<a_i, x> <= 1}, returns the a_i; K's polar is their convex hull.
Matrix polar_vertices(const HPolytope& K);

struct InclusionOptions {
  double tol = 1e-7;
  unsigned threads = 1;
  lp::Options lp{};
};

struct InclusionReport {
  bool holds = false;
  double worst_margin = 0.0;
  Eigen::Index worst_facet = -1;
};

/// inner ⊂ scale * outer, checked facet by facet on `outer`:
/// h_inner(a_j) <= scale * b_j + tol.
InclusionReport inclusion_check(const HPolytope& inner, const HPolytope& outer, double scale,
                                const InclusionOptions& options = {});

/// One feasible convex decomposition of w over the rows of `generators`.
ConvexCoefficients polar_decompose(const Matrix& generators, const Vector& w,
                                   const lp::Options& options = {});

}  // namespace jgap
