#include "jgap/certificate.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "jgap/error.hpp"

namespace jgap {
namespace {

void check_shapes(const Certificate& cert) {
  if (cert.witnesses.rows() != cert.facet_dirs.rows() ||
      cert.witnesses.cols() != cert.facet_dirs.cols()) {
    throw Error(Errc::kDimensionMismatch, "certificate: witnesses and facet_dirs differ in shape");
  }
  if (!cert.polar_generators || cert.polar_generators->cols() != cert.witnesses.cols()) {
    throw Error(Errc::kDimensionMismatch, "certificate: polar generators missing or mis-sized");
  }
}

}  // namespace

std::string HypothesisReport::failed_family() const {
  if (!diagonal.ok) return "diagonal";
  if (!cross.ok) return "cross";
  if (!polar.ok) return "polar";
  if (!membership.ok) return "membership";
  if (!boundary.ok) return "boundary";
  return {};
}

HypothesisReport verify_hypotheses(const Certificate& cert, const HPolytope& K,
                                   const HypothesisTolerances& tol) {
  check_shapes(cert);
  if (K.dim() != cert.dim()) throw Error(Errc::kDimensionMismatch, "verify_hypotheses: K");
  const Eigen::Index m = cert.size();

  HypothesisReport report;
  report.threshold = cert.threshold;

  const Eigen::MatrixXd xy = cert.witnesses * cert.facet_dirs.transpose();
  report.cross.worst = -std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < m; ++i) {
    const double diag = std::abs(xy(i, i) - 1.0);
    if (report.diagonal.i < 0 || diag > report.diagonal.worst) {
      report.diagonal = {diag, i, i, true};
    }
    for (Eigen::Index j = 0; j < m; ++j) {
      if (i != j && xy(i, j) > report.cross.worst) report.cross = {xy(i, j), i, j, true};
    }
  }
  if (m < 2) report.cross = {0.0, -1, -1, true};
  report.diagonal.ok = report.diagonal.worst <= tol.diagonal;
  report.cross.ok = report.cross.i < 0 || report.cross.worst <= cert.threshold + tol.cross;

  const Eigen::MatrixXd xg = cert.witnesses * cert.polar_generators->transpose();
  Eigen::Index pi = 0;
  Eigen::Index pj = 0;
  report.polar.worst = xg.size() > 0 ? xg.maxCoeff(&pi, &pj) : 0.0;
  report.polar.i = pi;
  report.polar.j = pj;
  report.polar.ok = report.polar.worst <= cert.threshold + tol.polar;

  // slack(row, i) = <a_row, x_i> - b_row
  Eigen::MatrixXd slack = K.normals() * cert.witnesses.transpose();
  slack.colwise() -= K.offsets();
  report.membership.worst = -std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < m; ++i) {
    Eigen::Index row = 0;
    const double worst = slack.col(i).maxCoeff(&row);
    if (worst > report.membership.worst) report.membership = {worst, i, row, true};
    if (report.boundary.i < 0 || std::abs(worst) > report.boundary.worst) {
      report.boundary = {std::abs(worst), i, row, true};
    }
  }
  report.membership.ok = report.membership.worst <= tol.membership;
  report.boundary.ok = report.boundary.worst <= tol.boundary;

  report.pass = report.diagonal.ok && report.cross.ok && report.polar.ok &&
                report.membership.ok && report.boundary.ok;
  return report;
}

double facet_lower_bound(const Certificate& cert, const HypothesisReport& report) {
  if (!report.pass) {
    throw Error(Errc::kUnverifiedCertificate,
                "facet_lower_bound: hypotheses failed (" + report.failed_family() + ")");
  }
  return static_cast<double>(cert.size()) / (2.0 * cert.R);
}

ConvexCoefficients decompose_polar_point(const Certificate& cert, const Vector& w,
                                         const lp::Options& options) {
  return PolarDecomposer(cert, options)(w);
}

// With weights n/(n+1) decomposing the identity over the contacts u_j, any
// r equals sum_j mu_j u_j exactly when mu_j = (n <r, u_j> + s) / (n+1) with
// s = sum mu. Writing r = w - sum lambda_i y_i and s = 1 - sum lambda_i,
// mu >= 0 becomes sum_i lambda_i (n <y_i, u_j> + 1) <= n <w, u_j> + 1.
PolarDecomposer::PolarDecomposer(const Certificate& cert, const lp::Options& options)
    : cert_(&cert), options_(options) {
  check_shapes(cert);
  if (cert.polar_family != PolarFamily::kSimplexContacts) return;
  const Matrix& gens = *cert.polar_generators;
  const Eigen::Index m = cert.size();
  const auto dn = static_cast<double>(cert.dim());
  reduced_.resize(gens.rows(), m + 1);
  reduced_.leftCols(m) = (dn * (gens * cert.facet_dirs.transpose())).array() + 1.0;
  reduced_.col(m).setConstant(-1.0);
}

ConvexCoefficients PolarDecomposer::operator()(const Vector& w) const {
  const Certificate& cert = *cert_;
  if (w.size() != cert.dim()) throw Error(Errc::kDimensionMismatch, "decompose: w");
  const Matrix& gens = *cert.polar_generators;
  const Eigen::Index m = cert.size();
  const Eigen::Index g = gens.rows();

  if (cert.polar_family != PolarFamily::kSimplexContacts) {
    Matrix all(m + g, cert.dim());
    all.topRows(m) = cert.facet_dirs;
    all.bottomRows(g) = gens;
    return polar_decompose(all, w, options_);
  }

  const auto dn = static_cast<double>(cert.dim());
  const Vector b = (dn * (gens * w)).array() + 1.0;
  Vector c = Vector::Zero(m + 1);
  c[m] = -1.0;

  const lp::InequalityResult res = lp::maximize(reduced_, b, c, lp::Sign::kNonnegative, options_);
  if (res.status != lp::Status::kOptimal ||
      res.objective < -1e-9 * std::max(1.0, b.cwiseAbs().maxCoeff())) {
    throw Error(Errc::kNotInHull, "decompose_polar_point: w is outside the polar body");
  }
  Vector lambda(m + g);
  lambda.head(m) = res.x.head(m).cwiseMax(0.0);
  const double s = std::max(0.0, 1.0 - lambda.head(m).sum());
  const Vector r = w - cert.facet_dirs.transpose() * lambda.head(m);
  lambda.tail(g) = (((dn * (gens * r)).array() + s) / (dn + 1.0)).cwiseMax(0.0);
  lambda /= lambda.sum();
  return ConvexCoefficients(std::move(lambda));
}

CountingReport counting_check(const Certificate& cert, const Vector& w,
                              const ConvexCoefficients& lambda) {
  check_shapes(cert);
  const Matrix& gens = *cert.polar_generators;
  const Eigen::Index m = cert.size();
  if (lambda.size() != m + gens.rows() || w.size() != cert.dim()) {
    throw Error(Errc::kNotInPolar, "counting_check: decomposition has the wrong length");
  }

  // Reproduce w from the nonzero weights only; random test points are sparse.
  Vector rebuilt = Vector::Zero(cert.dim());
  for (Eigen::Index i = 0; i < lambda.size(); ++i) {
    const double l = lambda[i];
    if (l == 0.0) continue;
    rebuilt += l * (i < m ? cert.facet_dirs.row(i) : gens.row(i - m)).transpose();
  }
  const double residual = (rebuilt - w).lpNorm<Eigen::Infinity>();
  if (residual > 1e-7) {
    throw Error(Errc::kNotInPolar,
                "counting_check: decomposition residual " + std::to_string(residual));
  }

  CountingReport report;
  report.min_lambda_in_o = 1.0;
  const Vector scores = cert.R * (cert.witnesses * w);
  for (Eigen::Index i = 0; i < m; ++i) {
    if (scores[i] >= 1.0) {
      ++report.o_size;
      report.min_lambda_in_o = std::min(report.min_lambda_in_o, lambda[i]);
    }
  }
  report.ok = static_cast<double>(report.o_size) <= 2.0 * cert.R;
  report.lambda_floor_ok = report.min_lambda_in_o >= 1.0 / (2.0 * cert.R) - 1e-9;
  return report;
}

PolarSample sample_polar_point(const Certificate& cert, Rng& rng) {
  check_shapes(cert);
  const Matrix& gens = *cert.polar_generators;
  const Eigen::Index m = cert.size();
  const Eigen::Index g = gens.rows();
  std::uniform_int_distribution<int> facet_count(1, 4);
  std::uniform_int_distribution<int> gen_count(0, 3);
  std::uniform_int_distribution<Eigen::Index> pick_facet(0, m - 1);
  std::uniform_int_distribution<Eigen::Index> pick_gen(0, g - 1);
  std::exponential_distribution<double> weight(1.0);

  Vector lambda = Vector::Zero(m + g);
  const int facets = facet_count(rng);
  for (int t = 0; t < facets; ++t) lambda[pick_facet(rng)] += weight(rng);
  const int generators = gen_count(rng);
  for (int t = 0; t < generators; ++t) lambda[m + pick_gen(rng)] += weight(rng);
  lambda /= lambda.sum();

  Vector w = Vector::Zero(cert.dim());
  for (Eigen::Index i = 0; i < m + g; ++i) {
    if (lambda[i] != 0.0) w += lambda[i] * (i < m ? cert.facet_dirs.row(i) : gens.row(i - m)).transpose();
  }
  return PolarSample{std::move(w), ConvexCoefficients(std::move(lambda))};
}

AuditReport adversarial_facet_audit(const Certificate& cert, const HPolytope& K,
                                    const HPolytope& P, const AuditOptions& options) {
  for (Eigen::Index i = 0; i < P.num_facets(); ++i) {
    if (P.offset(i) != 1.0) {
      throw Error(Errc::kNonUnitOffsets, "audit: candidate offsets must all be 1");
    }
  }
  AuditReport report;
  report.facets_p = P.num_facets();
  report.bound = static_cast<double>(cert.size()) / (2.0 * cert.R);

  InclusionOptions inc;
  inc.tol = options.tol;
  inc.threads = options.threads;

  const InclusionReport inner = inclusion_check(K, P, 1.0, inc);
  report.inner_ok = inner.holds;
  report.inner_margin = inner.worst_margin;

  try {
    const InclusionReport outer = inclusion_check(P, K, cert.R, inc);
    report.outer_ok = outer.holds;
    report.outer_margin = outer.worst_margin;
  } catch (const Error& e) {
    if (e.code() != Errc::kUnbounded) throw;
    report.outer_ok = false;
    report.outer_margin = std::numeric_limits<double>::infinity();
    report.outer_note = "candidate is unbounded";
  }

  report.sandwich_ok = report.inner_ok && report.outer_ok;
  report.consistent = !(report.sandwich_ok && static_cast<double>(report.facets_p) < report.bound);
  return report;
}

}  // namespace jgap
