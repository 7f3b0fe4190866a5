#pragma once

#include "jgap/linalg.hpp"

namespace jgap {

/// Lifts of an equatorial direction theta (unit, orthogonal to the unit pole beta):
///
///   down(theta) = -(1/8) beta + sqrt(1 - 1/64) theta
///   up(theta)   =  sqrt(1 - 1/49) beta + (1/7) theta
///
/// <up(theta), down(theta)> = 1/C0 for every theta. For equatorial alpha and
/// theta, <down(alpha), up(theta)> > 0 forces <alpha, theta> >= sqrt(48/63).
namespace lift {

inline constexpr double kDownTilt = 1.0 / 8.0;
inline constexpr double kUpTilt = 1.0 / 7.0;
inline constexpr double kOrthogonalityTol = 1e-10;

/// sqrt(48/63): the smallest <alpha, theta> compatible with a positive
/// <down(alpha), up(theta)>.
double separation_threshold();

}  // namespace lift

/// C0 = 1 / ((1/7) sqrt(1 - 1/64) (1 - sqrt(48/63))) ≈ 55.4977, evaluated once
/// in long double.
double c0_constant();

Vector lift_down(const Vector& theta, const Vector& beta);
Vector lift_up(const Vector& theta, const Vector& beta);

struct SeparationReport {
  double lhs = 0.0;  ///< <down(alpha), up(theta)>
  double rhs = 0.0;  ///< <alpha, theta>
  /// lhs <= 0 or rhs > 3/4.
  bool implication_ok = false;
  /// lhs <= 0 or rhs >= sqrt(48/63) - 1e-9; the sharp form of the implication.
  bool sharp_ok = false;
};

SeparationReport separation_implication(const Vector& alpha, const Vector& theta,
                                        const Vector& beta);

}  // namespace jgap
