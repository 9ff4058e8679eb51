#include "scaler/sim/stances.hpp"

#include "scaler/body/four_bar.hpp"

namespace scaler {

RigidTransform graspPose(const GravityFrame& gravity, const Eigen::Vector3d& world_position) {
  RigidTransform wall = gravity.wallToWorld();
  // Approach along the inward normal, lateral axis shared with the wall frame.
  Eigen::Vector3d x = -wall.rotation.col(2);
  Eigen::Vector3d y = wall.rotation.col(1);
  Eigen::Matrix3d r;
  r.col(0) = x;
  r.col(1) = y;
  r.col(2) = x.cross(y);
  return RigidTransform{r, world_position};
}

StanceContext wallStance(const RobotModel& model, const GravityFrame& gravity,
                         const std::vector<LimbId>& attached, const NominalStanceOptions& opts) {
  StanceContext ctx;
  ctx.gravity = gravity;
  RigidTransform wall = gravity.wallToWorld();

  RigidTransform body_pose =
      wall * RigidTransform::fromTranslation({opts.climb_position_m, 0.0, opts.standoff_m});
  ctx.com_world = body_pose * model.com_offset_m;
  ctx.payload_point_world = ctx.com_world;

  TorqueContext tc;
  tc.body_pose = body_pose;
  auto shoulders = shoulderFrames(model, ShiftState{LiftSide::Neutral, 0.0});

  for (LimbId id : attached) {
    const RigidTransform& sh = shoulders[limbIndex(id)];
    // Hold directly beneath the shoulder on the climbing surface.
    Eigen::Vector3d hold_wall(opts.climb_position_m + sh.translation.x(), sh.translation.y(),
                              opts.hold_protrusion_m);
    Eigen::Vector3d hold_world = wall * hold_wall;
    ctx.contacts.push_back(makeContact(hold_world, gravity.wallNormal(), id,
                                       opts.surface_slope_deg, opts.preload_n));
    if (opts.with_torque_context) {
      RigidTransform target_body = body_pose.inverse() * graspPose(gravity, hold_world);
      tc.joints[limbIndex(id)] = limbIkAt(model, id, sh, target_body);
    }
  }
  if (opts.with_torque_context) ctx.torque_context = tc;
  return ctx;
}

}  // namespace scaler
