#include "jgap/lift.hpp"

#include <cmath>

#include "jgap/error.hpp"

namespace jgap {
namespace {

long double c0_long() {
  const long double down = std::sqrt(1.0L - 1.0L / 64.0L);
  const long double gap = 1.0L - std::sqrt(48.0L / 63.0L);
  return 1.0L / ((1.0L / 7.0L) * down * gap);
}

const double kC0 = static_cast<double>(c0_long());
const double kDownCos = static_cast<double>(std::sqrt(1.0L - 1.0L / 64.0L));
const double kUpCos = static_cast<double>(std::sqrt(1.0L - 1.0L / 49.0L));
const double kSeparation = static_cast<double>(std::sqrt(48.0L / 63.0L));

// Validates |theta| = 1, |beta| = 1 and <theta, beta> = 0 to 1e-10, then
// returns theta re-projected onto the equator and renormalized.
Vector equatorial(const Vector& theta, const Vector& beta) {
  if (theta.size() != beta.size()) throw Error(Errc::kDimensionMismatch, "lift: dimensions");
  const double tol = lift::kOrthogonalityTol;
  if (std::abs(beta.norm() - 1.0) > tol) throw Error(Errc::kNotUnit, "lift: |beta| != 1");
  if (std::abs(theta.norm() - 1.0) > tol) throw Error(Errc::kNotUnit, "lift: |theta| != 1");
  if (std::abs(theta.dot(beta)) > tol) {
    throw Error(Errc::kNotOrthogonal, "lift: theta is not orthogonal to beta");
  }
  const Vector pole = beta / beta.norm();
  Vector t = theta / theta.norm();
  t -= t.dot(pole) * pole;
  return t / t.norm();
}

}  // namespace

double lift::separation_threshold() { return kSeparation; }

double c0_constant() { return kC0; }

Vector lift_down(const Vector& theta, const Vector& beta) {
  const Vector t = equatorial(theta, beta);
  return -lift::kDownTilt * (beta / beta.norm()) + kDownCos * t;
}

Vector lift_up(const Vector& theta, const Vector& beta) {
  const Vector t = equatorial(theta, beta);
  return kUpCos * (beta / beta.norm()) + lift::kUpTilt * t;
}

SeparationReport separation_implication(const Vector& alpha, const Vector& theta,
                                        const Vector& beta) {
  SeparationReport report;
  report.lhs = lift_down(alpha, beta).dot(lift_up(theta, beta));
  report.rhs = equatorial(alpha, beta).dot(equatorial(theta, beta));
  report.implication_ok = report.lhs <= 0.0 || report.rhs > 0.75;
  report.sharp_ok = report.lhs <= 0.0 || report.rhs >= kSeparation - 1e-9;
  return report;
}

}  // namespace jgap
