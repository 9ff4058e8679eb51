#ifndef SCALER_STAB_SOLVER_HPP_
#define SCALER_STAB_SOLVER_HPP_

#include <optional>

#include "scaler/core/gravity.hpp"
#include "scaler/core/stance.hpp"
#include "scaler/kin/limb.hpp"
#include "scaler/stab/contact.hpp"

namespace scaler {

/// Joint state used by the torque post-filter: body pose plus per-limb
/// joint vectors for the limbs that appear in the contact list.
struct TorqueContext {
  RigidTransform body_pose;
  std::array<Vector6d, 4> joints;
};

struct TorqueCheck {
  bool ok = true;
  double worst_utilization = 0.0;  // max |tau| / limit over joints and limbs
  LimbId worst_limb = LimbId::FrontLeft;
};

/// Maps each contact force through the limb Jacobian transpose and compares
/// against the joint torque limits. Reported separately from the solver
/// verdict: a force distribution can balance the wrench yet overload a motor.
TorqueCheck torquePostFilter(const RobotModel& model, const std::vector<ContactSpec>& contacts,
                             const std::vector<Eigen::Vector3d>& forces, const TorqueContext& ctx);

/// A stance posed for capacity analysis.
struct StanceContext {
  GravityFrame gravity;
  std::vector<ContactSpec> contacts;
  Eigen::Vector3d com_world = Eigen::Vector3d::Zero();
  Eigen::Vector3d payload_point_world = Eigen::Vector3d::Zero();
  double thrust_n = 0.0;  // body posture actuator assist along the climb tangent
  std::optional<TorqueContext> torque_context;
};

/// Force distribution for the stance at a given payload.
ContactSolution solveStance(const RobotModel& model, const StanceContext& ctx, double payload_kg);

/// Contact feasibility and (when context is present) the torque post-filter.
bool stanceFeasible(const RobotModel& model, const StanceContext& ctx, double payload_kg);

/// Bisection on payload mass to the feasibility boundary (0.01 kg tolerance).
/// Returns the cap value when nothing up to the cap is infeasible. Throws
/// BaselineInfeasible when the unloaded stance already fails.
double maxPayload(const RobotModel& model, const StanceContext& ctx, double cap_kg = 1000.0);

}  // namespace scaler

#endif  // SCALER_STAB_SOLVER_HPP_
