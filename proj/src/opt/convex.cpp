#include "scaler/opt/convex.hpp"

#include <cmath>
#include <limits>

namespace scaler {

namespace {

struct Reduced {
  Eigen::VectorXd x0;   // particular equality solution
  Eigen::MatrixXd N;    // nullspace basis (n x k)
  bool consistent = true;
};

Reduced reduceEqualities(const ConvexProblem& prob) {
  Reduced r;
  if (prob.A_eq.rows() == 0) {
    r.x0 = Eigen::VectorXd::Zero(prob.n);
    r.N = Eigen::MatrixXd::Identity(prob.n, prob.n);
    return r;
  }
  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(prob.A_eq);
  r.x0 = cod.solve(prob.b_eq);
  double scale = 1.0 + prob.b_eq.norm();
  if ((prob.A_eq * r.x0 - prob.b_eq).norm() > 1e-8 * scale) {
    r.consistent = false;
    return r;
  }
  Eigen::FullPivLU<Eigen::MatrixXd> lu(prob.A_eq);
  r.N = lu.kernel();
  if (lu.dimensionOfKernel() == 0) {
    r.N = Eigen::MatrixXd::Zero(prob.n, 0);
  }
  return r;
}

/// Barrier value/gradient/Hessian of the inequality set at x; returns false
/// when x is not strictly feasible.
struct BarrierEval {
  double value = 0.0;
  Eigen::VectorXd grad;
  Eigen::MatrixXd hess;
  bool interior = false;
};

BarrierEval evalBarrier(const ConvexProblem& prob, const Eigen::VectorXd& x) {
  BarrierEval e;
  int n = static_cast<int>(x.size());
  e.grad = Eigen::VectorXd::Zero(n);
  e.hess = Eigen::MatrixXd::Zero(n, n);
  for (const auto& lc : prob.lin) {
    double s = lc.b - lc.a.dot(x);
    if (s <= 0.0) return e;
    e.value -= std::log(s);
    Eigen::VectorXd a = lc.a.transpose();
    e.grad += a / s;
    e.hess += (a * a.transpose()) / (s * s);
  }
  for (const auto& sc : prob.soc) {
    Eigen::VectorXd u = sc.P * x + sc.p;
    double v = sc.q.dot(x) + sc.r;
    double w = v * v - u.squaredNorm();
    if (v <= 0.0 || w <= 0.0) return e;
    e.value -= std::log(w);
    Eigen::VectorXd dw = 2.0 * v * sc.q - 2.0 * sc.P.transpose() * u;
    Eigen::MatrixXd d2w = 2.0 * sc.q * sc.q.transpose() - 2.0 * sc.P.transpose() * sc.P;
    e.grad -= dw / w;
    e.hess += (dw * dw.transpose()) / (w * w) - d2w / w;
  }
  e.interior = true;
  return e;
}

bool strictlyFeasible(const ConvexProblem& prob, const Eigen::VectorXd& x) {
  for (const auto& lc : prob.lin) {
    if (lc.b - lc.a.dot(x) <= 0.0) return false;
  }
  for (const auto& sc : prob.soc) {
    double v = sc.q.dot(x) + sc.r;
    if (v <= 0.0) return false;
    if (v * v - (sc.P * x + sc.p).squaredNorm() <= 0.0) return false;
  }
  return true;
}

double objective(const ConvexProblem& prob, const Eigen::VectorXd& x) {
  double val = prob.c.size() ? prob.c.dot(x) : 0.0;
  if (prob.Q.size()) val += 0.5 * x.dot(prob.Q * x);
  return val;
}

/// Newton descent of phi(z) = t * f0(x0 + N z) + barrier(x0 + N z).
/// Returns the final z; assumes the start is strictly feasible.
Eigen::VectorXd newtonCentering(const ConvexProblem& prob, const Reduced& red, double t,
                                Eigen::VectorXd z, const SolverOptions& opts) {
  int k = static_cast<int>(red.N.cols());
  if (k == 0) return z;
  for (int it = 0; it < opts.max_newton; ++it) {
    Eigen::VectorXd x = red.x0 + red.N * z;
    BarrierEval bar = evalBarrier(prob, x);
    if (!bar.interior) break;  // should not happen: line search guards feasibility

    Eigen::VectorXd gx = bar.grad;
    Eigen::MatrixXd hx = bar.hess;
    if (prob.c.size()) gx += t * prob.c;
    if (prob.Q.size()) {
      gx += t * (prob.Q * x);
      hx += t * prob.Q;
    }
    Eigen::VectorXd gz = red.N.transpose() * gx;
    Eigen::MatrixXd hz = red.N.transpose() * hx * red.N;

    double ridge = 1e-12 * (1.0 + hz.trace() / std::max(1, k));
    Eigen::LDLT<Eigen::MatrixXd> ldlt;
    Eigen::VectorXd step;
    for (int attempt = 0; attempt < 8; ++attempt) {
      ldlt.compute(hz + ridge * Eigen::MatrixXd::Identity(k, k));
      if (ldlt.info() == Eigen::Success) {
        step = ldlt.solve(-gz);
        if (step.allFinite()) break;
      }
      ridge *= 100.0;
    }
    if (!step.allFinite()) break;

    double lambda2 = -gz.dot(step);
    if (lambda2 * 0.5 < opts.tol * (1.0 + std::abs(t * objective(prob, x)))) {
      break;  // Newton decrement small: centered
    }

    double phi0 = t * objective(prob, x) + bar.value;
    double alpha = 1.0;
    bool moved = false;
    for (int ls = 0; ls < 60; ++ls) {
      Eigen::VectorXd z_new = z + alpha * step;
      Eigen::VectorXd x_new = red.x0 + red.N * z_new;
      if (strictlyFeasible(prob, x_new)) {
        BarrierEval bn = evalBarrier(prob, x_new);
        double phi_new = t * objective(prob, x_new) + bn.value;
        if (phi_new <= phi0 + 1e-4 * alpha * gz.dot(step)) {
          z = z_new;
          moved = true;
          break;
        }
      }
      alpha *= 0.5;
    }
    if (!moved) break;
  }
  return z;
}

/// Phase I: minimize the worst violation s over (z, s). Returns a strictly
/// feasible z when one exists.
struct PhaseOneResult {
  bool feasible = false;
  Eigen::VectorXd z;
};

PhaseOneResult phaseOne(const ConvexProblem& prob, const Reduced& red, const SolverOptions& opts) {
  PhaseOneResult out;
  int k = static_cast<int>(red.N.cols());
  out.z = Eigen::VectorXd::Zero(k);
  if (strictlyFeasible(prob, red.x0 + red.N * out.z)) {
    out.feasible = true;
    return out;
  }

  // Augmented problem over (z, s): every constraint relaxed by s.
  ConvexProblem aug;
  aug.n = k + 1;
  aug.c = Eigen::VectorXd::Zero(k + 1);
  aug.c[k] = 1.0;
  for (const auto& lc : prob.lin) {
    LinearConstraint r;
    r.a = Eigen::RowVectorXd::Zero(k + 1);
    r.a.head(k) = lc.a * red.N;
    r.a[k] = -1.0;
    r.b = lc.b - lc.a.dot(red.x0);
    aug.lin.push_back(r);
  }
  for (const auto& sc : prob.soc) {
    SocConstraint r;
    r.P.resize(sc.P.rows(), k + 1);
    r.P.leftCols(k) = sc.P * red.N;
    r.P.col(k).setZero();
    r.p = sc.P * red.x0 + sc.p;
    r.q = Eigen::VectorXd::Zero(k + 1);
    r.q.head(k) = red.N.transpose() * sc.q;
    r.q[k] = 1.0;
    r.r = sc.q.dot(red.x0) + sc.r;
    aug.soc.push_back(r);
  }

  // Start with s above the worst violation.
  double worst = 0.0;
  Eigen::VectorXd x = red.x0;
  for (const auto& lc : prob.lin) worst = std::max(worst, lc.a.dot(x) - lc.b);
  for (const auto& sc : prob.soc) {
    worst = std::max(worst, (sc.P * x + sc.p).norm() - (sc.q.dot(x) + sc.r));
  }
  Eigen::VectorXd zs = Eigen::VectorXd::Zero(k + 1);
  zs[k] = worst + 1.0;

  Reduced triv;
  triv.x0 = Eigen::VectorXd::Zero(k + 1);
  triv.N = Eigen::MatrixXd::Identity(k + 1, k + 1);
  double t = opts.barrier_t0;
  int m = static_cast<int>(aug.lin.size()) + 2 * static_cast<int>(aug.soc.size());
  for (int outer = 0; outer < opts.max_outer; ++outer) {
    zs = newtonCentering(aug, triv, t, zs, opts);
    if (zs[k] < -opts.feasibility_margin) break;  // strictly feasible point found
    if (m / t < opts.tol) break;
    t *= opts.barrier_mu;
  }
  if (zs[k] < -opts.feasibility_margin) {
    out.feasible = true;
    out.z = zs.head(k);
  }
  return out;
}

}  // namespace

ConvexSolution solveConvex(const ConvexProblem& prob, const SolverOptions& opts) {
  ConvexSolution sol;
  Reduced red = reduceEqualities(prob);
  if (!red.consistent) {
    sol.status = SolveStatus::Infeasible;
    return sol;
  }

  PhaseOneResult p1 = phaseOne(prob, red, opts);
  if (!p1.feasible) {
    sol.status = SolveStatus::Infeasible;
    return sol;
  }

  Eigen::VectorXd z = p1.z;
  int m = static_cast<int>(prob.lin.size()) + 2 * static_cast<int>(prob.soc.size());
  double t = opts.barrier_t0;
  for (int outer = 0; outer < opts.max_outer; ++outer) {
    z = newtonCentering(prob, red, t, z, opts);
    if (m == 0 || m / t < opts.tol * (1.0 + std::abs(objective(prob, red.x0 + red.N * z)))) {
      break;
    }
    t *= opts.barrier_mu;
  }

  sol.x = red.x0 + red.N * z;
  sol.objective = objective(prob, sol.x);
  sol.status = SolveStatus::Optimal;
  if (prob.A_eq.rows()) {
    sol.equality_residual = (prob.A_eq * sol.x - prob.b_eq).lpNorm<Eigen::Infinity>();
  }
  double worst = std::numeric_limits<double>::infinity();
  for (const auto& lc : prob.lin) worst = std::min(worst, lc.b - lc.a.dot(sol.x));
  for (const auto& sc : prob.soc) {
    worst = std::min(worst, sc.q.dot(sol.x) + sc.r - (sc.P * sol.x + sc.p).norm());
  }
  sol.worst_inequality_slack = std::isfinite(worst) ? worst : 0.0;
  return sol;
}

bool convexFeasible(const ConvexProblem& prob, const SolverOptions& opts) {
  Reduced red = reduceEqualities(prob);
  if (!red.consistent) return false;
  return phaseOne(prob, red, opts).feasible;
}

}  // namespace scaler
