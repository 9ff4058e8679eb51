#ifndef SCALER_KIN_LIMB_HPP_
#define SCALER_KIN_LIMB_HPP_

#include <Eigen/Dense>

#include "scaler/core/robot_model.hpp"
#include "scaler/core/transform.hpp"

namespace scaler {

using Vector6d = Eigen::Matrix<double, 6, 1>;
using Matrix6d = Eigen::Matrix<double, 6, 6>;

/// Limb chain: shoulder roll (q1) about the climb axis, planar five-bar
/// (q2, q3) in the rolled sagittal plane, and a yaw-pitch-roll spherical
/// wrist (q4-q6) mounted on the front lower link. The toe sits toe_offset
/// along the wrist approach axis (local x). In the walking configuration the
/// wrist joints are disabled and the toe is the five-bar end point with
/// point-foot (identity) orientation.

struct IkOptions {
  double near_singular_threshold = 1e-6;
  bool check_joint_limits = true;
};

/// Toe pose in the shoulder frame.
RigidTransform limbFkFromShoulder(const LimbParams& limb, Configuration config, const Vector6d& q);

/// Toe pose in the body frame using the neutral shoulder placement.
RigidTransform limbFk(const RobotModel& model, LimbId id, const Vector6d& q);

/// Toe pose in the body frame with an explicit (shifted) shoulder frame.
RigidTransform limbFkAt(const RobotModel& model, LimbId id, const RigidTransform& shoulder,
                        const Vector6d& q);

/// Analytic inverse kinematics for a shoulder-frame toe target. Throws
/// Unreachable, NearSingular or WristGimbalLock.
Vector6d limbIkFromShoulder(const RobotModel& model, const LimbParams& limb, Configuration config,
                            const RigidTransform& target, const IkOptions& opts = {});

/// Body-frame target against the neutral shoulder placement.
Vector6d limbIk(const RobotModel& model, LimbId id, const RigidTransform& target,
                const IkOptions& opts = {});

Vector6d limbIkAt(const RobotModel& model, LimbId id, const RigidTransform& shoulder,
                  const RigidTransform& target, const IkOptions& opts = {});

/// Geometric Jacobian of the toe in the shoulder frame: rows 0-2 linear,
/// rows 3-5 angular. Walking configuration uses the leading 3x3 positional
/// block of (q1, q2, q3); the remaining entries are zero.
Matrix6d limbJacobian(const LimbParams& limb, Configuration config, const Vector6d& q);

/// sqrt(det(J J^T)) of the configuration-appropriate Jacobian block; zero at
/// degenerate five-bar closures.
double manipulability(const RobotModel& model, LimbId id, const Vector6d& q);

}  // namespace scaler

#endif  // SCALER_KIN_LIMB_HPP_
