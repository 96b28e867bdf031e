#pragma once

#include <Eigen/Dense>
#include <string>

namespace smoothlab {

enum class LPStatus { Optimal, Infeasible, Unbounded, IterationLimit };
std::string to_string(LPStatus s);

struct LPResult {
  LPStatus status = LPStatus::IterationLimit;
  double objective = 0.0;
  Eigen::VectorXd x;     // primal solution
  Eigen::VectorXd dual;  // y with A^T y <= c at optimality
  int iterations = 0;
};

struct LPOptions {
  int max_iterations = 100000;
  double tolerance = 1e-10;
  int stall_limit = 50;  // degenerate pivots before switching to Bland's rule
};

// min c^T x subject to A x = b, x >= 0. Dense two-phase tableau simplex.
LPResult solve_lp(const Eigen::MatrixXd& A, const Eigen::VectorXd& b, const Eigen::VectorXd& c,
                  const LPOptions& opt = {});

}  // namespace smoothlab
