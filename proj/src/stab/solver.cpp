#include "scaler/stab/solver.hpp"

#include <cmath>

#include "scaler/core/errors.hpp"

namespace scaler {

TorqueCheck torquePostFilter(const RobotModel& model, const std::vector<ContactSpec>& contacts,
                             const std::vector<Eigen::Vector3d>& forces, const TorqueContext& ctx) {
  TorqueCheck check;
  int n_joints = model.configuration == Configuration::Walking3DoF ? 3 : 6;
  for (size_t i = 0; i < contacts.size(); ++i) {
    const ContactSpec& c = contacts[i];
    const Vector6d& q = ctx.joints[limbIndex(c.limb)];
    Matrix6d jac = limbJacobian(model.limbs[limbIndex(c.limb)], model.configuration, q);
    // Point contact: the limb reacts the pure force (no grasp moment).
    Eigen::Vector3d f_body = ctx.body_pose.rotation.transpose() * forces[i];
    Vector6d tau = jac.topRows(3).transpose() * f_body;
    for (int j = 0; j < n_joints; ++j) {
      double util = std::abs(tau[j]) / model.joint_torque_limit_nm[j];
      if (util > check.worst_utilization) {
        check.worst_utilization = util;
        check.worst_limb = c.limb;
      }
    }
  }
  check.ok = check.worst_utilization <= 1.0;
  return check;
}

ContactSolution solveStance(const RobotModel& model, const StanceContext& ctx, double payload_kg) {
  ExternalWrench w = gravityWrench(model.mass(), ctx.com_world, ctx.gravity.gravity()) +
                     gravityWrench(payload_kg, ctx.payload_point_world, ctx.gravity.gravity());
  Eigen::Vector3d thrust = ctx.thrust_n * ctx.gravity.climbTangent();
  return distributeForces(model, ctx.contacts, w, thrust);
}

bool stanceFeasible(const RobotModel& model, const StanceContext& ctx, double payload_kg) {
  ContactSolution sol = solveStance(model, ctx, payload_kg);
  if (!sol.feasible) return false;
  if (ctx.torque_context) {
    return torquePostFilter(model, ctx.contacts, sol.forces, *ctx.torque_context).ok;
  }
  return true;
}

double maxPayload(const RobotModel& model, const StanceContext& ctx, double cap_kg) {
  if (!stanceFeasible(model, ctx, 0.0)) {
    throw BaselineInfeasible("stance is infeasible with no payload");
  }
  double lo = 0.0;
  double hi = 1.0;
  while (hi < cap_kg && stanceFeasible(model, ctx, hi)) {
    lo = hi;
    hi *= 2.0;
  }
  if (hi >= cap_kg) {
    if (stanceFeasible(model, ctx, cap_kg)) return cap_kg;
    hi = cap_kg;
  }
  // Feasibility is monotone in payload (the admissible sets are fixed while
  // the required wrench grows), so plain bisection applies.
  while (hi - lo > 0.01) {
    double mid = 0.5 * (lo + hi);
    if (stanceFeasible(model, ctx, mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

}  // namespace scaler
