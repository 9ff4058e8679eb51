#ifndef SCALER_SIM_STANCES_HPP_
#define SCALER_SIM_STANCES_HPP_

#include <vector>

#include "scaler/stab/solver.hpp"

namespace scaler {

/// Nominal stance factory used by the capacity scenarios: contacts sit on the
/// climbing surface under the neutral shoulder positions, the body floats at
/// the standoff distance, limb joints come from the grasp IK.
struct NominalStanceOptions {
  double standoff_m = 0.20;        // body frame to wall plane
  double hold_protrusion_m = 0.02; // grasp point height above the plane
  double preload_n = 70.0;
  double surface_slope_deg = 0.0;
  double climb_position_m = 0.0;   // body-frame origin along the wall climb axis
  bool with_torque_context = true;
};

/// Wall/ground stance with the listed limbs attached. Contacts, COM and the
/// torque context are all expressed in the world frame of the gravity frame.
StanceContext wallStance(const RobotModel& model, const GravityFrame& gravity,
                         const std::vector<LimbId>& attached,
                         const NominalStanceOptions& opts = {});

/// Grasp orientation at a wall hold: approach axis straight into the surface.
RigidTransform graspPose(const GravityFrame& gravity, const Eigen::Vector3d& world_position);

}  // namespace scaler

#endif  // SCALER_SIM_STANCES_HPP_
