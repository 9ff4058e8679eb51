#ifndef SCALER_CORE_GRAVITY_HPP_
#define SCALER_CORE_GRAVITY_HPP_

#include "scaler/core/transform.hpp"

namespace scaler {

/// Environment framing: gravity vector plus the inclination of the climbing
/// surface. Inclination is measured from the ground plane: 0 deg = ground,
/// 90 deg = vertical wall, >90 deg = overhang, 180 deg = ceiling.
///
/// Canonical wall frame (expressed in world, world Z up):
///   X_w = climb tangent (up the slope), Z_w = outward surface normal
///   (pointing from the surface toward the robot), Y_w = Z_w x X_w.
class GravityFrame {
 public:
  GravityFrame() = default;
  GravityFrame(const Eigen::Vector3d& gravity, double wall_inclination_deg);

  static GravityFrame vertical() { return GravityFrame(defaultGravity(), 90.0); }
  static GravityFrame ground() { return GravityFrame(defaultGravity(), 0.0); }
  static GravityFrame ceiling() { return GravityFrame(defaultGravity(), 180.0); }
  static GravityFrame overhang(double deg) { return GravityFrame(defaultGravity(), deg); }

  static Eigen::Vector3d defaultGravity() { return {0.0, 0.0, -9.81}; }

  const Eigen::Vector3d& gravity() const { return gravity_; }
  double wallInclinationDeg() const { return inclination_deg_; }
  double gravityMagnitude() const { return gravity_.norm(); }

  /// Outward surface normal in world coordinates.
  Eigen::Vector3d wallNormal() const;
  /// Unit climb direction (up the slope; horizontal on the ceiling).
  Eigen::Vector3d climbTangent() const;
  /// Wall frame -> world transform (origin on the surface).
  RigidTransform wallToWorld() const;

  /// |g| * sin(theta): the gravity component lying in the wall plane.
  double tangentialMagnitude() const;
  /// Component of gravity along the outward normal (pull-off); zero when
  /// gravity presses the robot onto the surface (theta <= 90 deg).
  double pulloffMagnitude() const;

 private:
  Eigen::Vector3d gravity_ = defaultGravity();
  double inclination_deg_ = 90.0;
};

}  // namespace scaler

#endif  // SCALER_CORE_GRAVITY_HPP_
