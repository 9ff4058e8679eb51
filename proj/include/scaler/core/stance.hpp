#ifndef SCALER_CORE_STANCE_HPP_
#define SCALER_CORE_STANCE_HPP_

#include <array>
#include <optional>
#include <string>

#include "scaler/core/robot_model.hpp"
#include "scaler/core/transform.hpp"

namespace scaler {

enum class LiftSide { Left, Right, Neutral };

const char* liftSideName(LiftSide s);

/// Body-shift mechanism state. Neutral corresponds to the symmetric
/// (zero-angle) linkage pose.
struct ShiftState {
  LiftSide lift_side = LiftSide::Neutral;
  double actuator_angle_rad = 0.0;
};

/// One limb's grasp on the environment.
struct Attachment {
  int hold_id = -1;
  double grasp_normal_force_n = 70.0;  // per-fingertip squeeze preload
};

struct Payload {
  double mass_kg = 0.0;
  Eigen::Vector3d attach_point_m = Eigen::Vector3d::Zero();  // body frame
};

/// Full quasi-static robot state: world pose of the center-link body frame,
/// shift state, per-limb joints and attachments, and any carried payload.
struct StanceState {
  RigidTransform body_pose;  // world <- body (center link)
  ShiftState shift;
  std::array<Eigen::Matrix<double, 6, 1>, 4> joints = {
      Eigen::Matrix<double, 6, 1>::Zero(), Eigen::Matrix<double, 6, 1>::Zero(),
      Eigen::Matrix<double, 6, 1>::Zero(), Eigen::Matrix<double, 6, 1>::Zero()};
  std::array<std::optional<Attachment>, 4> attachments;
  Payload payload;

  int attachmentCount() const {
    int n = 0;
    for (const auto& a : attachments) n += a.has_value() ? 1 : 0;
    return n;
  }
  bool isAttached(LimbId id) const { return attachments[limbIndex(id)].has_value(); }
};

}  // namespace scaler

#endif  // SCALER_CORE_STANCE_HPP_
