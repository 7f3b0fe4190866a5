#pragma once

#include <cstddef>

#include "jgap/linalg.hpp"

/// Dense revised simplex.
///
/// The solver works on standard form  min c'z  s.t.  Mz = r, z >= 0  and keeps
/// an explicit inverse of the basis, so the cost per pivot is O(p^2 + p q) for
/// p rows and q columns. Geometric oracles call `maximize`, which solves the
/// inequality problem through its dual; the dual's row count is the number of
/// primal variables, which keeps the basis small when there are many facets.
namespace jgap::lp {

enum class Status { kOptimal, kInfeasible, kUnbounded, kIterationLimit };

struct Options {
  double feasibility_tol = 1e-9;
  double optimality_tol = 1e-9;
  double pivot_tol = 1e-11;
  /// 0 selects 50 * (rows + cols) + 1000.
  std::size_t max_iterations = 0;
  /// Rebuild the basis inverse from scratch every this many pivots.
  std::size_t refactor_every = 64;
  /// Consecutive degenerate pivots before switching to Bland's rule.
  std::size_t degenerate_limit = 30;
};

struct StandardResult {
  Status status = Status::kIterationLimit;
  double objective = 0.0;
  Vector primal;  ///< z, length q
  Vector duals;   ///< simplex multipliers y with c - M'y >= 0 at optimum, length p
  std::size_t iterations = 0;
};

StandardResult solve_standard(const Matrix& M, const Vector& r, const Vector& c,
                              const Options& options = {});

enum class Sign { kFree, kNonnegative };

struct InequalityResult {
  Status status = Status::kIterationLimit;
  double objective = 0.0;
  Vector x;
  std::size_t iterations = 0;
};

/// max c'x  s.t.  Ax <= b  (x free or x >= 0).
InequalityResult maximize(const Matrix& A, const Vector& b, const Vector& c, Sign sign,
                          const Options& options = {});

}  // namespace jgap::lp
