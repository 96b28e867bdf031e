#include "smoothlab/lp.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "smoothlab/errors.hpp"

namespace smoothlab {

std::string to_string(LPStatus s) {
  switch (s) {
    case LPStatus::Optimal: return "optimal";
    case LPStatus::Infeasible: return "infeasible";
    case LPStatus::Unbounded: return "unbounded";
    case LPStatus::IterationLimit: return "iteration limit";
  }
  return "unknown";
}

namespace {

constexpr double kPivotTol = 1e-9;
constexpr double kFeasTol = 1e-11;
constexpr int kRefactorEvery = 64;

// Tableau rows 0..m-1 are constraints, row m is the reduced-cost row. Columns
// 0..n-1 are structural, n..n+m-1 artificial, the last column the rhs. The
// tableau is rebuilt from the original data every kRefactorEvery pivots.
class Tableau {
 public:
  Tableau(const Eigen::MatrixXd& A, const Eigen::VectorXd& b, const LPOptions& opt)
      : m_(A.rows()), n_(A.cols()), opt_(opt), full_(A.rows(), A.cols() + A.rows()), rhs0_(b), basis_(A.rows()) {
    full_.setZero();
    sign_.resize(m_);
    for (int i = 0; i < m_; ++i) {
      sign_[i] = b(i) < 0 ? -1.0 : 1.0;
      full_.row(i).head(n_) = sign_[i] * A.row(i);
      full_(i, n_ + i) = 1.0;
      rhs0_(i) = sign_[i] * b(i);
      basis_[i] = n_ + i;
    }
    T_.resize(m_ + 1, n_ + m_ + 1);
    T_.topLeftCorner(m_, n_ + m_) = full_;
    T_.col(rhs()).head(m_) = rhs0_;
  }

  int rhs() const { return n_ + m_; }

  void set_cost(const Eigen::VectorXd& cost) {
    cost_ = Eigen::VectorXd::Zero(n_ + m_);
    cost_.head(cost.size()) = cost;
    price();
  }

  void price() {
    T_.row(m_).setZero();
    T_.row(m_).head(n_ + m_) = cost_.transpose();
    for (int i = 0; i < m_; ++i) {
      double cb = cost_(basis_[i]);
      if (cb != 0.0) T_.row(m_) -= cb * T_.row(i);
    }
  }

  void refactor() {
    Eigen::MatrixXd B(m_, m_);
    for (int i = 0; i < m_; ++i) B.col(i) = full_.col(basis_[i]);
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(B);
    T_.topLeftCorner(m_, n_ + m_) = lu.solve(full_);
    T_.col(rhs()).head(m_) = lu.solve(rhs0_);
    for (int i = 0; i < m_; ++i) {
      if (T_(i, rhs()) < 0.0 && T_(i, rhs()) > -kFeasTol) T_(i, rhs()) = 0.0;
    }
    price();
  }

  void pivot(int r, int c) {
    T_.row(r) /= T_(r, c);
    for (int i = 0; i <= m_; ++i) {
      if (i == r) continue;
      double f = T_(i, c);
      if (f != 0.0) T_.row(i) -= f * T_.row(r);
    }
    for (int i = 0; i < m_; ++i) {
      if (T_(i, rhs()) < 0.0 && T_(i, rhs()) > -kFeasTol) T_(i, rhs()) = 0.0;
    }
    basis_[r] = c;
    if (++since_refactor_ >= kRefactorEvery) {
      refactor();
      since_refactor_ = 0;
    }
  }

  // Simplex over columns [0, ncols).
  LPStatus run(int ncols, int& iterations) {
    int stall = 0;
    double last = T_(m_, rhs());
    while (iterations < opt_.max_iterations) {
      const bool bland = stall >= opt_.stall_limit;
      int enter = -1;
      double best = -opt_.tolerance;
      for (int j = 0; j < ncols; ++j) {
        double d = T_(m_, j);
        if (d < best) {
          enter = j;
          if (bland) break;
          best = d;
        }
      }
      if (enter < 0) return LPStatus::Optimal;
      // Harris two-pass ratio test: bound with a small feasibility slack, then
      // take the largest pivot among the rows within the bound.
      double bound = std::numeric_limits<double>::infinity();
      for (int i = 0; i < m_; ++i) {
        double a = T_(i, enter);
        if (a > kPivotTol) bound = std::min(bound, (std::max(T_(i, rhs()), 0.0) + kFeasTol) / a);
      }
      if (!std::isfinite(bound)) return LPStatus::Unbounded;
      int leave = -1;
      double piv = 0.0;
      for (int i = 0; i < m_; ++i) {
        double a = T_(i, enter);
        if (a <= kPivotTol || std::max(T_(i, rhs()), 0.0) / a > bound) continue;
        bool take = bland ? (leave < 0 || basis_[i] < basis_[leave]) : a > piv;
        if (take) {
          leave = i;
          piv = a;
        }
      }
      pivot(leave, enter);
      ++iterations;
      double obj = T_(m_, rhs());
      stall = std::abs(obj - last) <= 1e-14 * std::max(1.0, std::abs(obj)) ? stall + 1 : 0;
      last = obj;
    }
    return LPStatus::IterationLimit;
  }

  int m_, n_;
  LPOptions opt_;
  Eigen::MatrixXd full_;
  Eigen::VectorXd rhs0_;
  Eigen::VectorXd cost_;
  Eigen::MatrixXd T_;
  std::vector<int> basis_;
  std::vector<double> sign_;
  int since_refactor_ = 0;
};

}  // namespace

LPResult solve_lp(const Eigen::MatrixXd& A, const Eigen::VectorXd& b, const Eigen::VectorXd& c,
                  const LPOptions& opt) {
  if (A.rows() != b.size() || A.cols() != c.size()) fail_validation("solve_lp: dimension mismatch");
  const int m = A.rows(), n = A.cols();
  LPResult res;
  Tableau tab(A, b, opt);

  // Phase 1: minimize the sum of artificials.
  Eigen::VectorXd phase1 = Eigen::VectorXd::Zero(n + m);
  phase1.tail(m).setOnes();
  tab.set_cost(phase1);
  LPStatus st = tab.run(n + m, res.iterations);
  if (st == LPStatus::IterationLimit) {
    res.status = st;
    return res;
  }
  tab.refactor();
  const double scale = std::max(1.0, b.cwiseAbs().maxCoeff());
  if (-tab.T_(m, tab.rhs()) > 1e-8 * scale) {
    res.status = LPStatus::Infeasible;
    return res;
  }
  // Drive remaining artificials out of the basis where possible.
  for (int i = 0; i < m; ++i) {
    if (tab.basis_[i] < n) continue;
    int col = -1;
    double big = 1e-7;
    for (int j = 0; j < n; ++j) {
      if (std::abs(tab.T_(i, j)) > big) {
        big = std::abs(tab.T_(i, j));
        col = j;
      }
    }
    if (col >= 0) tab.pivot(i, col);
  }

  // Phase 2 over structural columns only.
  tab.set_cost(c);
  st = tab.run(n, res.iterations);
  if (st == LPStatus::Optimal) {
    // Re-check optimality on a freshly factored tableau.
    tab.refactor();
    st = tab.run(n, res.iterations);
    tab.refactor();
  }
  res.status = st;
  if (st != LPStatus::Optimal) return res;

  res.x = Eigen::VectorXd::Zero(n);
  for (int i = 0; i < m; ++i) {
    if (tab.basis_[i] < n) res.x(tab.basis_[i]) = std::max(tab.T_(i, tab.rhs()), 0.0);
  }
  res.objective = c.dot(res.x);
  // Reduced cost of artificial i is -y_i of the sign-adjusted system.
  res.dual.resize(m);
  for (int i = 0; i < m; ++i) res.dual(i) = -tab.T_(m, n + i) * tab.sign_[i];
  return res;
}

}  // namespace smoothlab
