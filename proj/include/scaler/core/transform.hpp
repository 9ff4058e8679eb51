#ifndef SCALER_CORE_TRANSFORM_HPP_
#define SCALER_CORE_TRANSFORM_HPP_

#include <Eigen/Dense>

namespace scaler {

/// Proper rigid transform (rotation + translation), the frame type used
/// throughout the library. Rotation must stay orthonormal with det +1.
struct RigidTransform {
  Eigen::Matrix3d rotation = Eigen::Matrix3d::Identity();
  Eigen::Vector3d translation = Eigen::Vector3d::Zero();

  static RigidTransform Identity() { return {}; }

  static RigidTransform fromRotation(const Eigen::Matrix3d& r) {
    return {r, Eigen::Vector3d::Zero()};
  }

  static RigidTransform fromTranslation(const Eigen::Vector3d& t) {
    return {Eigen::Matrix3d::Identity(), t};
  }

  /// Rigid composition: (this * other) maps other-local points into the
  /// frame this is expressed in.
  RigidTransform operator*(const RigidTransform& other) const {
    return {rotation * other.rotation, rotation * other.translation + translation};
  }

  Eigen::Vector3d operator*(const Eigen::Vector3d& p) const {
    return rotation * p + translation;
  }

  RigidTransform inverse() const {
    Eigen::Matrix3d rt = rotation.transpose();
    return {rt, -(rt * translation)};
  }

  /// Frobenius deviation of R^T R from identity; < 1e-9 for a valid transform.
  double orthonormalityError() const {
    return (rotation.transpose() * rotation - Eigen::Matrix3d::Identity()).norm();
  }

  bool isValid(double tol = 1e-9) const {
    return orthonormalityError() < tol && rotation.determinant() > 0.0;
  }
};

inline RigidTransform compose(const RigidTransform& a, const RigidTransform& b) {
  return a * b;
}

/// Geodesic distance between two rotations in radians.
double rotationDistance(const Eigen::Matrix3d& a, const Eigen::Matrix3d& b);

/// Rotation about a unit axis by angle (Rodrigues).
Eigen::Matrix3d axisAngle(const Eigen::Vector3d& axis, double angle);

inline Eigen::Matrix3d rotX(double a) { return axisAngle(Eigen::Vector3d::UnitX(), a); }
inline Eigen::Matrix3d rotY(double a) { return axisAngle(Eigen::Vector3d::UnitY(), a); }
inline Eigen::Matrix3d rotZ(double a) { return axisAngle(Eigen::Vector3d::UnitZ(), a); }

inline Eigen::Matrix3d skew(const Eigen::Vector3d& v) {
  Eigen::Matrix3d m;
  m << 0, -v.z(), v.y(), v.z(), 0, -v.x(), -v.y(), v.x(), 0;
  return m;
}

/// Inverse of skew: extracts the rotation-rate vector from an
/// antisymmetric(ish) matrix; used by finite-difference Jacobian checks.
inline Eigen::Vector3d unskew(const Eigen::Matrix3d& m) {
  return {0.5 * (m(2, 1) - m(1, 2)), 0.5 * (m(0, 2) - m(2, 0)), 0.5 * (m(1, 0) - m(0, 1))};
}

}  // namespace scaler

#endif  // SCALER_CORE_TRANSFORM_HPP_
