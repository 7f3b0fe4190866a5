#pragma once

#include <cstddef>

#include "jgap/linalg.hpp"
#include "jgap/polytope.hpp"

namespace jgap {

/// Regular simplex with inradius 1 in John's position.
///
/// `contacts` holds u_1..u_{n+1} as rows: unit vectors with <u_i, u_j> = -1/n
/// for i != j. The simplex is {x : <x, u_i> <= 1}, its vertices are -n u_i, and
/// the weights a_i = n/(n+1) decompose the identity over the contacts.
struct SimplexFrame {
  Eigen::Index dim = 0;
  Matrix contacts;
  Vector weights;
};

/// Maps the normalized vertices of the standard simplex in R^{n+1} into R^n
/// through the orthonormal basis obtained by Gram-Schmidt on e_1 - c, ...,
/// e_n - c (c the centroid), taken in index order.
SimplexFrame build_simplex(Eigen::Index n);

HPolytope simplex_hrep(const SimplexFrame& frame);

struct JohnReport {
  double identity_error = 0.0;    ///< ||sum a_i x_i x_i^T - I||_F
  double barycenter_error = 0.0;  ///< |sum a_i x_i|
};

JohnReport john_check(const Matrix& points, const Vector& weights);

struct GramReport {
  double norm_error = 0.0;  ///< max_i ||u_i| - 1|
  double gram_error = 0.0;  ///< max_{i != j} |<u_i, u_j> + 1/n|
  double sum_error = 0.0;   ///< ||sum u_i||_inf
};

GramReport gram_report(const SimplexFrame& frame);

/// The section of the simplex by the hyperplane <x, u_1> = 0.
///
/// `dirs` holds v_1..v_n as rows. The section is a regular (n-1)-simplex with
/// vertices c_n * n * v_i, where c_n = sqrt((n-1)/(n+1)).
struct EquatorFrame {
  Eigen::Index dim = 0;
  Vector beta;
  Matrix dirs;
  double c_n = 0.0;
};

EquatorFrame equator_frame(const SimplexFrame& frame);

}  // namespace jgap
