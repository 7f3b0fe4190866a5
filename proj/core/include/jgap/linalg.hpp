#pragma once

#include <Eigen/Dense>

namespace jgap {

/// Points and directions in R^n.
using Vector = Eigen::VectorXd;

/// Row-major so that facet normals, contact points and witnesses are
/// contiguous rows.
using Matrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

}  // namespace jgap
