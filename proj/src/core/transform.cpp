#include "scaler/core/transform.hpp"

#include <cmath>

namespace scaler {

double rotationDistance(const Eigen::Matrix3d& a, const Eigen::Matrix3d& b) {
  double c = ((a.transpose() * b).trace() - 1.0) * 0.5;
  return std::acos(std::clamp(c, -1.0, 1.0));
}

Eigen::Matrix3d axisAngle(const Eigen::Vector3d& axis, double angle) {
  return Eigen::AngleAxisd(angle, axis.normalized()).toRotationMatrix();
}

}  // namespace scaler
