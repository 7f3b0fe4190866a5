#include "jgap/simplex_frame.hpp"

#include <cmath>

#include "jgap/error.hpp"

namespace jgap {

SimplexFrame build_simplex(Eigen::Index n) {
  if (n < 2) throw Error(Errc::kDimensionTooSmall, "build_simplex: n must be at least 2");

  // Gram-Schmidt on e_i - c in R^{n+1} (i = 1..n, in order) yields
  //   q_i = (e_i - mean of e_i..e_{n+1}) / norm,
  // supported on coordinates i..n+1. Since q_i is orthogonal to the centroid,
  // <q_i, (e_j - c) / |e_j - c|> = q_i[j] / |e_j - c|, so contact u_j is
  // column j of Q scaled by 1 / sqrt(n / (n+1)).
  const double dn = static_cast<double>(n);
  const double inv_lift_norm = 1.0 / std::sqrt(dn / (dn + 1.0));

  SimplexFrame frame;
  frame.dim = n;
  frame.contacts = Matrix::Zero(n + 1, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double tail = static_cast<double>(n + 1 - i);  // coordinates i..n
    const double diag = 1.0 - 1.0 / tail;
    const double off = -1.0 / tail;
    const double norm = std::sqrt(diag * diag + (tail - 1.0) * off * off);
    frame.contacts(i, i) = diag / norm * inv_lift_norm;
    for (Eigen::Index j = i + 1; j <= n; ++j) frame.contacts(j, i) = off / norm * inv_lift_norm;
  }
  frame.weights = Vector::Constant(n + 1, dn / (dn + 1.0));
  return frame;
}

HPolytope simplex_hrep(const SimplexFrame& frame) {
  return HPolytope(frame.contacts, Vector::Ones(frame.contacts.rows()));
}

JohnReport john_check(const Matrix& points, const Vector& weights) {
  if (points.rows() != weights.size()) {
    throw Error(Errc::kDimensionMismatch, "john_check: points and weights differ in count");
  }
  const Eigen::Index n = points.cols();
  Eigen::MatrixXd moment = points.transpose() * weights.asDiagonal() * points;
  moment -= Eigen::MatrixXd::Identity(n, n);
  JohnReport report;
  report.identity_error = moment.norm();
  report.barycenter_error = (points.transpose() * weights).norm();
  return report;
}

GramReport gram_report(const SimplexFrame& frame) {
  const Eigen::Index count = frame.contacts.rows();
  const double expected = -1.0 / static_cast<double>(frame.dim);
  const Eigen::MatrixXd gram = frame.contacts * frame.contacts.transpose();
  GramReport report;
  for (Eigen::Index i = 0; i < count; ++i) {
    report.norm_error = std::max(report.norm_error, std::abs(std::sqrt(gram(i, i)) - 1.0));
    for (Eigen::Index j = 0; j < count; ++j) {
      if (i != j) report.gram_error = std::max(report.gram_error, std::abs(gram(i, j) - expected));
    }
  }
  report.sum_error = frame.contacts.colwise().sum().lpNorm<Eigen::Infinity>();
  return report;
}

EquatorFrame equator_frame(const SimplexFrame& frame) {
  const Eigen::Index n = frame.dim;
  if (n < 3) throw Error(Errc::kDimensionTooSmall, "equator_frame: n must be at least 3");
  const double dn = static_cast<double>(n);

  EquatorFrame eq;
  eq.dim = n;
  eq.beta = frame.contacts.row(0).transpose();
  eq.dirs.resize(n, n);

  // Edge [-n u_1, -n u_i] meets <x, u_1> = 0 at
  //   p_i = -(n/(n+1)) u_1 - (n^2/(n+1)) u_i.
  const double a = -dn / (dn + 1.0);
  const double b = -dn * dn / (dn + 1.0);
  double norm_sum = 0.0;
  for (Eigen::Index i = 1; i <= n; ++i) {
    Vector p = a * frame.contacts.row(0).transpose() + b * frame.contacts.row(i).transpose();
    const double norm = p.norm();
    norm_sum += norm;
    eq.dirs.row(i - 1) = (p / norm).transpose();
  }
  eq.c_n = norm_sum / (dn * dn);
  return eq;
}

}  // namespace jgap
