#include "scaler/stab/contact.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "scaler/gripper/goat.hpp"
#include "scaler/opt/convex.hpp"

namespace scaler {

void ContactSpec::validateBasis() const {
  Eigen::Matrix3d basis;
  basis.col(0) = tangent1;
  basis.col(1) = tangent2;
  basis.col(2) = normal;
  if ((basis.transpose() * basis - Eigen::Matrix3d::Identity()).norm() > 1e-9) {
    throw std::invalid_argument("contact grasp frame must be orthonormal");
  }
}

ContactSpec makeContact(const Eigen::Vector3d& position, const Eigen::Vector3d& normal,
                        LimbId limb, double surface_slope_deg, double preload_n) {
  ContactSpec c;
  c.position = position;
  c.normal = normal.normalized();
  // Any stable tangent pair works; pick against the least-aligned axis.
  Eigen::Vector3d seed = std::abs(c.normal.x()) < 0.9 ? Eigen::Vector3d::UnitX()
                                                      : Eigen::Vector3d::UnitY();
  c.tangent1 = (seed - seed.dot(c.normal) * c.normal).normalized();
  c.tangent2 = c.normal.cross(c.tangent1);
  c.surface_slope_deg = surface_slope_deg;
  c.preload_n = preload_n;
  c.limb = limb;
  return c;
}

ExternalWrench gravityWrench(double mass_kg, const Eigen::Vector3d& com_world,
                             const Eigen::Vector3d& gravity) {
  ExternalWrench w;
  w.force = mass_kg * gravity;
  w.torque = com_world.cross(w.force);
  return w;
}

ExternalWrench operator+(const ExternalWrench& a, const ExternalWrench& b) {
  return ExternalWrench{a.force + b.force, a.torque + b.torque};
}

std::pair<Eigen::Vector3d, Eigen::Vector3d> equilibriumResidual(
    const std::vector<ContactSpec>& contacts, const std::vector<Eigen::Vector3d>& forces,
    const ExternalWrench& external) {
  if (contacts.size() != forces.size()) {
    throw std::invalid_argument("contacts and forces must have matching sizes");
  }
  Eigen::Vector3d f = external.force;
  Eigen::Vector3d tau = external.torque;
  for (size_t i = 0; i < contacts.size(); ++i) {
    f += forces[i];
    tau += contacts[i].position.cross(forces[i]);
  }
  return {f, tau};
}

ContactCaps contactCaps(const RobotModel& model, const ContactSpec& c) {
  ContactCaps caps;
  caps.pull_n = maxWithstandingForce(model.grasp_bound, c.surface_slope_deg);
  caps.shear_n = contactShearCapacity(model.spine_cells, c.preload_n);
  caps.compression_n = model.compression_cap_n;
  return caps;
}

namespace {

/// Admissible-set rows for contact i over the stacked force vector.
void appendContactRows(ConvexProblem& prob, const RobotModel& model, const ContactSpec& c,
                       int offset, int n_vars) {
  ContactCaps caps = contactCaps(model, c);
  auto row = [&](const Eigen::Vector3d& dir, double cap) {
    LinearConstraint lc;
    lc.a = Eigen::RowVectorXd::Zero(n_vars);
    lc.a.segment<3>(offset) = dir.transpose();
    lc.b = cap;
    prob.lin.push_back(lc);
  };
  row(-c.normal, caps.pull_n);        // tension toward the wall
  row(c.normal, caps.compression_n);  // push off the wall
  for (int k = 0; k < 8; ++k) {
    double ang = k * M_PI / 4.0;
    row(std::cos(ang) * c.tangent1 + std::sin(ang) * c.tangent2, caps.shear_n);
  }
}

ConvexProblem buildProblem(const RobotModel& model, const std::vector<ContactSpec>& contacts,
                           const ExternalWrench& total, bool minmax_stage,
                           double norm_cap /* for the tie-break stage */) {
  int c = static_cast<int>(contacts.size());
  int n = 3 * c + (minmax_stage ? 1 : 0);
  ConvexProblem prob;
  prob.n = n;
  prob.A_eq = Eigen::MatrixXd::Zero(6, n);
  prob.b_eq = Eigen::VectorXd::Zero(6);
  for (int i = 0; i < c; ++i) {
    prob.A_eq.block<3, 3>(0, 3 * i) = Eigen::Matrix3d::Identity();
    prob.A_eq.block<3, 3>(3, 3 * i) = skew(contacts[i].position);
  }
  prob.b_eq.head<3>() = -total.force;
  prob.b_eq.tail<3>() = -total.torque;

  for (int i = 0; i < c; ++i) appendContactRows(prob, model, contacts[i], 3 * i, n);

  if (minmax_stage) {
    // ||f_i|| <= t, minimize t.
    prob.c = Eigen::VectorXd::Zero(n);
    prob.c[n - 1] = 1.0;
    for (int i = 0; i < c; ++i) {
      SocConstraint sc;
      sc.P = Eigen::MatrixXd::Zero(3, n);
      sc.P.block<3, 3>(0, 3 * i) = Eigen::Matrix3d::Identity();
      sc.p = Eigen::VectorXd::Zero(3);
      sc.q = Eigen::VectorXd::Zero(n);
      sc.q[n - 1] = 1.0;
      sc.r = 0.0;
      prob.soc.push_back(sc);
    }
    LinearConstraint pos;  // t >= 0 keeps the cone rows well-posed
    pos.a = Eigen::RowVectorXd::Zero(n);
    pos.a[n - 1] = -1.0;
    pos.b = 0.0;
    prob.lin.push_back(pos);
  } else {
    // Tie-break: minimize sum ||f_i||^2 with every norm capped at norm_cap.
    prob.Q = Eigen::MatrixXd::Identity(n, n);
    prob.c = Eigen::VectorXd::Zero(n);
    for (int i = 0; i < c; ++i) {
      SocConstraint sc;
      sc.P = Eigen::MatrixXd::Zero(3, n);
      sc.P.block<3, 3>(0, 3 * i) = Eigen::Matrix3d::Identity();
      sc.p = Eigen::VectorXd::Zero(3);
      sc.q = Eigen::VectorXd::Zero(n);
      sc.r = norm_cap;
      prob.soc.push_back(sc);
    }
  }
  return prob;
}

}  // namespace

ContactSolution distributeForces(const RobotModel& model, const std::vector<ContactSpec>& contacts,
                                 const ExternalWrench& external, const Eigen::Vector3d& thrust) {
  if (contacts.size() < 2) {
    throw std::invalid_argument("force distribution needs at least two contacts");
  }
  for (const auto& c : contacts) c.validateBasis();

  ExternalWrench total = external;
  total.force += thrust;

  ContactSolution sol;
  int c = static_cast<int>(contacts.size());

  ConvexProblem stage1 = buildProblem(model, contacts, total, true, 0.0);
  ConvexSolution s1 = solveConvex(stage1);
  if (s1.status != SolveStatus::Optimal) {
    sol.feasible = false;
    return sol;
  }
  double t_star = s1.x[stage1.n - 1];

  // Tie-break: among near-optimal distributions prefer the smallest total
  // squared load (the whippletree philosophy applied across limbs).
  ConvexProblem stage2 = buildProblem(model, contacts, total, false, t_star * (1.0 + 1e-6) + 1e-9);
  ConvexSolution s2 = solveConvex(stage2);
  const Eigen::VectorXd& x = s2.status == SolveStatus::Optimal ? s2.x : s1.x;

  sol.feasible = true;
  sol.forces.resize(c);
  for (int i = 0; i < c; ++i) sol.forces[i] = x.segment<3>(3 * i);
  auto [rf, rt] = equilibriumResidual(contacts, sol.forces, total);
  sol.residual_force = rf;
  sol.residual_torque = rt;
  double max_norm = 0.0;
  for (const auto& f : sol.forces) max_norm = std::max(max_norm, f.norm());
  sol.objective = max_norm;

  // Slacks against the same polytopal admissible set the solver used.
  double worst = std::numeric_limits<double>::infinity();
  for (int i = 0; i < c; ++i) {
    ContactCaps caps = contactCaps(model, contacts[i]);
    const Eigen::Vector3d& f = sol.forces[i];
    double fn = f.dot(contacts[i].normal);
    worst = std::min(worst, caps.pull_n + fn);
    worst = std::min(worst, caps.compression_n - fn);
    for (int k = 0; k < 8; ++k) {
      double ang = k * M_PI / 4.0;
      Eigen::Vector3d d = std::cos(ang) * contacts[i].tangent1 + std::sin(ang) * contacts[i].tangent2;
      worst = std::min(worst, caps.shear_n - d.dot(f));
    }
  }
  sol.worst_slack = worst;
  return sol;
}

}  // namespace scaler
