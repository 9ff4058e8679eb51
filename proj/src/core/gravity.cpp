#include "scaler/core/gravity.hpp"

#include <cmath>
#include <stdexcept>

namespace scaler {

namespace {
constexpr double kDegToRad = M_PI / 180.0;
}

GravityFrame::GravityFrame(const Eigen::Vector3d& gravity, double wall_inclination_deg)
    : gravity_(gravity), inclination_deg_(wall_inclination_deg) {
  if (gravity_.norm() <= 0.0) {
    throw std::invalid_argument("GravityFrame: gravity magnitude must be positive");
  }
  if (inclination_deg_ < 0.0 || inclination_deg_ > 180.0) {
    throw std::invalid_argument("GravityFrame: inclination must lie in [0, 180] deg");
  }
}

Eigen::Vector3d GravityFrame::wallNormal() const {
  double th = inclination_deg_ * kDegToRad;
  return {std::sin(th), 0.0, std::cos(th)};
}

Eigen::Vector3d GravityFrame::climbTangent() const {
  double th = inclination_deg_ * kDegToRad;
  return {-std::cos(th), 0.0, std::sin(th)};
}

RigidTransform GravityFrame::wallToWorld() const {
  Eigen::Vector3d x = climbTangent();
  Eigen::Vector3d z = wallNormal();
  Eigen::Vector3d y = z.cross(x);
  Eigen::Matrix3d r;
  r.col(0) = x;
  r.col(1) = y;
  r.col(2) = z;
  return RigidTransform{r, Eigen::Vector3d::Zero()};
}

double GravityFrame::tangentialMagnitude() const {
  Eigen::Vector3d n = wallNormal();
  return (gravity_ - gravity_.dot(n) * n).norm();
}

double GravityFrame::pulloffMagnitude() const {
  return std::max(0.0, gravity_.dot(wallNormal()));
}

}  // namespace scaler
