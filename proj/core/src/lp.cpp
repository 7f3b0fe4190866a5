#include "jgap/lp.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "jgap/error.hpp"

namespace jgap::lp {
namespace {

using Eigen::Index;
using DenseInverse = Eigen::MatrixXd;

class RevisedSimplex {
 public:
  RevisedSimplex(const Matrix& M, const Vector& r, const Options& options)
      : M_(M), r_(r), opt_(options), p_(M.rows()), q_(M.cols()) {
    sign_.assign(static_cast<std::size_t>(p_), 1.0);
    for (Index i = 0; i < p_; ++i) {
      if (r_[i] < 0.0) {
        sign_[static_cast<std::size_t>(i)] = -1.0;
        r_[i] = -r_[i];
        M_.row(i) *= -1.0;
      }
    }
    max_iter_ = opt_.max_iterations != 0
                    ? opt_.max_iterations
                    : static_cast<std::size_t>(50 * (p_ + q_) + 1000);
    crash_basis();
  }

  StandardResult run(const Vector& c) {
    StandardResult out;
    const double scale = std::max(1.0, r_.lpNorm<Eigen::Infinity>());

    if (artificial_count_ > 0) {
      Vector phase1 = Vector::Zero(q_ + p_);
      for (Index j = q_; j < q_ + p_; ++j) phase1[j] = 1.0;
      const Status s1 = iterate(phase1, /*allow_artificial=*/true, out.iterations);
      if (s1 == Status::kIterationLimit) {
        out.status = s1;
        return out;
      }
      double infeasibility = 0.0;
      for (Index i = 0; i < p_; ++i) {
        if (head_[static_cast<std::size_t>(i)] >= q_) infeasibility += std::max(0.0, xb_[i]);
      }
      if (infeasibility > opt_.feasibility_tol * scale) {
        out.status = Status::kInfeasible;
        return out;
      }
      drive_out_artificials();
    }

    Vector cost = Vector::Zero(q_ + p_);
    cost.head(q_) = c;
    const Status s2 = iterate(cost, /*allow_artificial=*/false, out.iterations);
    out.status = s2;
    if (s2 != Status::kOptimal) return out;

    out.primal = Vector::Zero(q_);
    for (Index i = 0; i < p_; ++i) {
      const Index j = head_[static_cast<std::size_t>(i)];
      if (j < q_) out.primal[j] = std::max(0.0, xb_[i]);
    }
    const Vector y = basic_costs(cost).transpose() * binv_;
    out.duals = y;
    for (Index i = 0; i < p_; ++i) out.duals[i] *= sign_[static_cast<std::size_t>(i)];
    out.objective = c.dot(out.primal);
    return out;
  }

 private:
  // Column j of the extended matrix [M I].
  Vector column(Index j) const {
    if (j < q_) return M_.col(j);
    Vector e = Vector::Zero(p_);
    e[j - q_] = 1.0;
    return e;
  }

  Vector basic_costs(const Vector& cost) const {
    Vector cb(p_);
    for (Index i = 0; i < p_; ++i) cb[i] = cost[head_[static_cast<std::size_t>(i)]];
    return cb;
  }

  // Columns with a single positive entry serve as the initial basic variable
  // for their row; remaining rows get an artificial.
  void crash_basis() {
    head_.assign(static_cast<std::size_t>(p_), -1);
    std::vector<double> diag(static_cast<std::size_t>(p_), 1.0);
    for (Index j = 0; j < q_; ++j) {
      Index row = -1;
      int nonzeros = 0;
      for (Index i = 0; i < p_ && nonzeros < 2; ++i) {
        if (M_(i, j) != 0.0) {
          ++nonzeros;
          row = i;
        }
      }
      if (nonzeros != 1 || head_[static_cast<std::size_t>(row)] >= 0) continue;
      if (M_(row, j) < 0.0 && r_[row] == 0.0) {
        // A zero right-hand side lets the row change sign for free.
        M_.row(row) *= -1.0;
        sign_[static_cast<std::size_t>(row)] *= -1.0;
      }
      if (M_(row, j) > 0.0) {
        head_[static_cast<std::size_t>(row)] = j;
        diag[static_cast<std::size_t>(row)] = M_(row, j);
      }
    }
    artificial_count_ = 0;
    binv_ = DenseInverse::Zero(p_, p_);
    xb_.resize(p_);
    for (Index i = 0; i < p_; ++i) {
      auto& h = head_[static_cast<std::size_t>(i)];
      if (h < 0) {
        h = q_ + i;
        ++artificial_count_;
      }
      binv_(i, i) = 1.0 / diag[static_cast<std::size_t>(i)];
      xb_[i] = r_[i] * binv_(i, i);
    }
  }

  void refactor() {
    Eigen::MatrixXd B(p_, p_);
    for (Index i = 0; i < p_; ++i) B.col(i) = column(head_[static_cast<std::size_t>(i)]);
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(B);
    binv_ = lu.inverse();
    xb_ = binv_ * r_;
  }

  void pivot(Index leave_row, Index enter, const Vector& alpha) {
    const double piv = alpha[leave_row];
    binv_.row(leave_row) /= piv;
    for (Index i = 0; i < p_; ++i) {
      if (i == leave_row || alpha[i] == 0.0) continue;
      binv_.row(i) -= alpha[i] * binv_.row(leave_row);
    }
    const double step = xb_[leave_row] / piv;
    for (Index i = 0; i < p_; ++i) {
      if (i != leave_row) xb_[i] -= step * alpha[i];
    }
    xb_[leave_row] = step;
    head_[static_cast<std::size_t>(leave_row)] = enter;
    ++since_refactor_;
    if (since_refactor_ >= opt_.refactor_every) {
      refactor();
      since_refactor_ = 0;
    }
  }

  Status iterate(const Vector& cost, bool allow_artificial, std::size_t& iterations) {
    std::vector<char> is_basic(static_cast<std::size_t>(q_ + p_), 0);
    for (Index h : head_) is_basic[static_cast<std::size_t>(h)] = 1;

    std::size_t degenerate_run = 0;
    const Index ncols = allow_artificial ? q_ + p_ : q_;
    while (iterations < max_iter_) {
      const Vector y = basic_costs(cost).transpose() * binv_;
      const bool bland = degenerate_run >= opt_.degenerate_limit;

      // Pricing.
      Index enter = -1;
      double best = -opt_.optimality_tol;
      const Vector reduced_struct = cost.head(q_) - M_.transpose() * y;
      for (Index j = 0; j < ncols; ++j) {
        if (is_basic[static_cast<std::size_t>(j)]) continue;
        const double d = j < q_ ? reduced_struct[j] : cost[j] - y[j - q_];
        if (d < best) {
          enter = j;
          if (bland) break;
          best = d;
        }
      }
      if (enter < 0) return Status::kOptimal;

      const Vector alpha = binv_ * column(enter);

      // Ratio test; ties go to the larger pivot, or the smallest index under Bland.
      Index leave = -1;
      double best_ratio = std::numeric_limits<double>::infinity();
      for (Index i = 0; i < p_; ++i) {
        if (alpha[i] <= opt_.pivot_tol) continue;
        const double ratio = std::max(0.0, xb_[i]) / alpha[i];
        if (leave < 0 || ratio < best_ratio - 1e-12) {
          leave = i;
          best_ratio = ratio;
        } else if (ratio <= best_ratio + 1e-12) {
          const bool take = bland ? head_[static_cast<std::size_t>(i)] <
                                        head_[static_cast<std::size_t>(leave)]
                                  : alpha[i] > alpha[leave];
          if (take) {
            leave = i;
            best_ratio = std::min(best_ratio, ratio);
          }
        }
      }
      if (leave < 0) return Status::kUnbounded;

      degenerate_run = best_ratio <= opt_.feasibility_tol ? degenerate_run + 1 : 0;
      is_basic[static_cast<std::size_t>(head_[static_cast<std::size_t>(leave)])] = 0;
      is_basic[static_cast<std::size_t>(enter)] = 1;
      pivot(leave, enter, alpha);
      ++iterations;
    }
    return Status::kIterationLimit;
  }

  // After phase 1, replace basic artificials (all at zero) by structural
  // columns where possible. Rows where no structural column has a usable
  // entry are redundant; their artificial stays basic at zero.
  void drive_out_artificials() {
    std::vector<char> is_basic(static_cast<std::size_t>(q_ + p_), 0);
    for (Index h : head_) is_basic[static_cast<std::size_t>(h)] = 1;
    for (Index i = 0; i < p_; ++i) {
      if (head_[static_cast<std::size_t>(i)] < q_) continue;
      const Vector row = M_.transpose() * binv_.row(i).transpose();
      Index enter = -1;
      double best = 1e-7;
      for (Index j = 0; j < q_; ++j) {
        if (is_basic[static_cast<std::size_t>(j)]) continue;
        if (std::abs(row[j]) > best) {
          best = std::abs(row[j]);
          enter = j;
        }
      }
      if (enter < 0) continue;
      const Vector alpha = binv_ * column(enter);
      is_basic[static_cast<std::size_t>(head_[static_cast<std::size_t>(i)])] = 0;
      is_basic[static_cast<std::size_t>(enter)] = 1;
      pivot(i, enter, alpha);
    }
  }

  Matrix M_;
  Vector r_;
  Options opt_;
  Index p_;
  Index q_;
  std::vector<double> sign_;
  std::vector<Index> head_;
  DenseInverse binv_;
  Vector xb_;
  Index artificial_count_ = 0;
  std::size_t since_refactor_ = 0;
  std::size_t max_iter_ = 0;
};

}  // namespace

StandardResult solve_standard(const Matrix& M, const Vector& r, const Vector& c,
                              const Options& options) {
  if (M.rows() != r.size() || M.cols() != c.size()) {
    throw Error(Errc::kDimensionMismatch, "solve_standard: inconsistent LP dimensions");
  }
  RevisedSimplex simplex(M, r, options);
  return simplex.run(c);
}

InequalityResult maximize(const Matrix& A, const Vector& b, const Vector& c, Sign sign,
                          const Options& options) {
  if (A.rows() != b.size() || A.cols() != c.size()) {
    throw Error(Errc::kDimensionMismatch, "maximize: inconsistent LP dimensions");
  }
  const Index m = A.rows();
  const Index n = A.cols();

  // Dual: min b'pi  s.t.  A'pi = c (free x) or A'pi - s = c (x >= 0), pi, s >= 0.
  Matrix dual_M;
  Vector dual_cost;
  if (sign == Sign::kFree) {
    dual_M = A.transpose();
    dual_cost = b;
  } else {
    dual_M.resize(n, m + n);
    dual_M.leftCols(m) = A.transpose();
    dual_M.rightCols(n) = -Matrix::Identity(n, n);
    dual_cost = Vector::Zero(m + n);
    dual_cost.head(m) = b;
  }

  InequalityResult out;
  const StandardResult dual = solve_standard(dual_M, c, dual_cost, options);
  out.iterations = dual.iterations;
  switch (dual.status) {
    case Status::kOptimal:
      out.status = Status::kOptimal;
      out.objective = dual.objective;
      out.x = dual.duals;
      return out;
    case Status::kUnbounded:
      out.status = Status::kInfeasible;
      return out;
    case Status::kIterationLimit:
      out.status = Status::kIterationLimit;
      return out;
    case Status::kInfeasible:
      break;
  }

  // Dual infeasible: the primal is unbounded if it is feasible at all.
  bool primal_feasible = b.minCoeff() >= 0.0;
  if (!primal_feasible) {
    const InequalityResult probe = maximize(A, b, Vector::Zero(n), sign, options);
    primal_feasible = probe.status == Status::kOptimal;
  }
  out.status = primal_feasible ? Status::kUnbounded : Status::kInfeasible;
  return out;
}

}  // namespace jgap::lp
