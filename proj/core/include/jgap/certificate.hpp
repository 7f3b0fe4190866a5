#pragma once

#include <cstddef>
#include <memory>
#include <string>

#include "jgap/linalg.hpp"
#include "jgap/polytope.hpp"
#include "jgap/random.hpp"

namespace jgap {

/// How the polar of the base body L is generated.
enum class PolarFamily {
  kGeneric,
  /// Contacts of a regular simplex in John's position: n+1 unit vectors with
  /// sum 0 and sum (n/(n+1)) u u^T = I. Decompositions over them are unique up
  /// to a constant shift, which `decompose_polar_point` exploits.
  kSimplexContacts,
};

/// Witness data for the facet lower bound on K = {<x, y_i> <= 1} ∩ L:
/// points x_i with <x_i, y_i> = 1, <x_i, y_j> <= 1/(2R) for i != j, and
/// <x_i, g> <= 1/(2R) for every generator g of L's polar.
struct Certificate {
  Matrix witnesses;   ///< x_1..x_m as rows
  Matrix facet_dirs;  ///< y_1..y_m as rows
  std::shared_ptr<const Matrix> polar_generators;
  PolarFamily polar_family = PolarFamily::kGeneric;
  double R = 0.0;
  double threshold = 0.0;  ///< 1/(2R)

  Eigen::Index size() const { return witnesses.rows(); }
  Eigen::Index dim() const { return witnesses.cols(); }
};

struct HypothesisTolerances {
  double diagonal = 1e-9;
  double cross = 1e-9;
  double polar = 1e-9;
  double membership = 1e-8;
  double boundary = 1e-9;
};

/// Worst observed value of one inequality family and where it occurred.
struct FamilyMargin {
  double worst = 0.0;
  Eigen::Index i = -1;
  Eigen::Index j = -1;
  bool ok = true;
};

struct HypothesisReport {
  bool pass = false;
  double threshold = 0.0;
  FamilyMargin diagonal;    ///< max_i |<x_i, y_i> - 1|
  FamilyMargin cross;       ///< max_{i != j} <x_i, y_j>, against threshold
  FamilyMargin polar;       ///< max_{i, g} <x_i, g>, against threshold
  FamilyMargin membership;  ///< max_i max_rows (<x_i, a> - b)
  FamilyMargin boundary;    ///< max_i |max_rows (<x_i, a> - b)|

  /// Name of the first failing family, or empty when all pass.
  std::string failed_family() const;
};

HypothesisReport verify_hypotheses(const Certificate& cert, const HPolytope& K,
                                   const HypothesisTolerances& tol = {});

/// m / (2R). Throws UnverifiedCertificate unless `report.pass`.
double facet_lower_bound(const Certificate& cert, const HypothesisReport& report);

/// Decomposes w over facet_dirs followed by the polar generators. For
/// kSimplexContacts the contact part is eliminated in closed form and only
/// the facet weights go through the LP.
ConvexCoefficients decompose_polar_point(const Certificate& cert, const Vector& w,
                                         const lp::Options& options = {});

/// Repeated decompositions against one certificate. Precomputes the
/// generator/facet inner products that `decompose_polar_point` would
/// otherwise rebuild on every call.
class PolarDecomposer {
 public:
  explicit PolarDecomposer(const Certificate& cert, const lp::Options& options = {});
  ConvexCoefficients operator()(const Vector& w) const;

 private:
  const Certificate* cert_;
  lp::Options options_;
  Matrix reduced_;  ///< n <u_j, y_i> + 1, then a column of -1
};

struct CountingReport {
  Eigen::Index o_size = 0;      ///< |{i : R <x_i, w> >= 1}|
  bool ok = false;              ///< o_size <= 2R
  bool lambda_floor_ok = false; ///< lambda_i >= 1/(2R) - 1e-9 for every i counted
  double min_lambda_in_o = 0.0; ///< smallest lambda_i over the counted set (1 if empty)
};

/// Checks the counting step of the facet bound for one polar point w with
/// decomposition `lambda` (facet weights first, then generator weights).
/// Throws NotInPolar when lambda does not reproduce w.
CountingReport counting_check(const Certificate& cert, const Vector& w,
                              const ConvexCoefficients& lambda);

/// A point of the polar body together with the convex weights that produced it.
struct PolarSample {
  Vector w;
  ConvexCoefficients lambda{Vector::Ones(1)};
};

/// Random sparse convex combination of facet directions and polar generators:
/// up to four facets and up to three generators with exponential weights.
PolarSample sample_polar_point(const Certificate& cert, Rng& rng);

struct AuditOptions {
  double tol = 1e-7;
  unsigned threads = 1;
};

struct AuditReport {
  bool inner_ok = false;  ///< K ⊂ P
  bool outer_ok = false;  ///< P ⊂ R K
  bool sandwich_ok = false;
  double inner_margin = 0.0;
  double outer_margin = 0.0;
  std::string outer_note;  ///< set when P ⊂ RK could not be evaluated (e.g. P unbounded)
  Eigen::Index facets_p = 0;
  double bound = 0.0;
  /// Never both sandwiched and below the bound.
  bool consistent = false;
};

/// Audits a candidate P = {<x, w_l> <= 1} against K ⊂ P ⊂ RK and the bound
/// m/(2R). Throws NonUnitOffsets if P is not normalized.
AuditReport adversarial_facet_audit(const Certificate& cert, const HPolytope& K,
                                    const HPolytope& P, const AuditOptions& options = {});

}  // namespace jgap
