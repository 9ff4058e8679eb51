#ifndef SCALER_OPT_CONVEX_HPP_
#define SCALER_OPT_CONVEX_HPP_

#include <vector>

#include <Eigen/Dense>

namespace scaler {

/// Small dense convex programs of the kind the force-distribution and
/// capacity searches produce: a linear or convex-quadratic objective, linear
/// equalities, linear inequalities and second-order-cone rows, solved with a
/// log-barrier interior-point method after eliminating the equalities.
/// Problem sizes here are tiny (tens of variables), so robustness and
/// determinism matter more than scalability.

struct LinearConstraint {
  Eigen::RowVectorXd a;
  double b = 0.0;  // a x <= b
};

/// || P x + p || <= q^T x + r
struct SocConstraint {
  Eigen::MatrixXd P;
  Eigen::VectorXd p;
  Eigen::VectorXd q;
  double r = 0.0;
};

struct ConvexProblem {
  int n = 0;
  Eigen::MatrixXd Q;  // objective 0.5 x^T Q x + c^T x; Q may be empty for linear
  Eigen::VectorXd c;
  Eigen::MatrixXd A_eq;  // A_eq x = b_eq (may be empty)
  Eigen::VectorXd b_eq;
  std::vector<LinearConstraint> lin;
  std::vector<SocConstraint> soc;
};

enum class SolveStatus { Optimal, Infeasible, NumericalTrouble };

struct ConvexSolution {
  SolveStatus status = SolveStatus::NumericalTrouble;
  Eigen::VectorXd x;
  double objective = 0.0;
  double equality_residual = 0.0;
  double worst_inequality_slack = 0.0;  // min over constraints; >= 0 when feasible
};

struct SolverOptions {
  double barrier_t0 = 1.0;
  double barrier_mu = 10.0;
  double tol = 1e-9;
  int max_outer = 40;
  int max_newton = 80;
  double feasibility_margin = 1e-9;  // phase-I must reach s < -margin
};

ConvexSolution solveConvex(const ConvexProblem& prob, const SolverOptions& opts = {});

/// Phase-I only: is the constraint set strictly feasible?
bool convexFeasible(const ConvexProblem& prob, const SolverOptions& opts = {});

}  // namespace scaler

#endif  // SCALER_OPT_CONVEX_HPP_
