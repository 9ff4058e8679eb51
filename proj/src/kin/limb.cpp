#include "scaler/kin/limb.hpp"

#include <array>
#include <cmath>
#include <utility>

#include "scaler/core/errors.hpp"
#include "scaler/kin/five_bar.hpp"

namespace scaler {

namespace {

Eigen::Vector3d planarToLocal(const Eigen::Vector2d& p) {
  // Plane coordinate e2 points from the shoulder toward the wall (-z).
  return {p.x(), 0.0, -p.y()};
}

/// Orientation of the wrist mount in the rolled leg frame: x along the front
/// lower link (approach), y along the plane normal.
Eigen::Matrix3d wristBase(const FiveBarState& st, double l_front_lower) {
  Eigen::Vector2d w = (st.end_point - st.front_elbow) / l_front_lower;
  Eigen::Vector3d x = planarToLocal(w);
  Eigen::Vector3d y = Eigen::Vector3d::UnitY();
  Eigen::Matrix3d r;
  r.col(0) = x;
  r.col(1) = y;
  r.col(2) = x.cross(y);
  return r;
}

Eigen::Matrix3d wristRotation(const Vector6d& q) {
  return rotZ(q[3]) * rotY(q[4]) * rotX(q[5]);
}

}  // namespace

RigidTransform limbFkFromShoulder(const LimbParams& limb, Configuration config, const Vector6d& q) {
  FiveBarState st = fiveBarFk(limb.five_bar, q[1], q[2], limb.branch);
  Eigen::Matrix3d roll = rotX(q[0]);
  Eigen::Vector3d end_local = planarToLocal(st.end_point);

  if (config == Configuration::Walking3DoF) {
    return RigidTransform{Eigen::Matrix3d::Identity(), roll * end_local};
  }
  Eigen::Matrix3d r_toe = roll * wristBase(st, limb.five_bar.l_front_lower_m) * wristRotation(q);
  Eigen::Vector3d toe = roll * end_local + r_toe * Eigen::Vector3d(limb.wrist.toe_offset_m, 0, 0);
  return RigidTransform{r_toe, toe};
}

RigidTransform limbFk(const RobotModel& model, LimbId id, const Vector6d& q) {
  return limbFkAt(model, id, model.shoulderNeutral(id), q);
}

RigidTransform limbFkAt(const RobotModel& model, LimbId id, const RigidTransform& shoulder,
                        const Vector6d& q) {
  return shoulder * limbFkFromShoulder(model.limbs[limbIndex(id)], model.configuration, q);
}

Vector6d limbIkFromShoulder(const RobotModel& model, const LimbParams& limb, Configuration config,
                            const RigidTransform& target, const IkOptions& opts) {
  Vector6d q = Vector6d::Zero();

  // Wrist-center position: back the toe offset out along the approach axis.
  Eigen::Vector3d p_wc = target.translation;
  if (config == Configuration::Climbing6DoF) {
    p_wc -= target.rotation * Eigen::Vector3d(limb.wrist.toe_offset_m, 0, 0);
  }

  double reach_planar = std::hypot(p_wc.y(), p_wc.z());
  if (reach_planar < 1e-9) {
    throw NearSingular("limb target lies on the shoulder roll axis");
  }
  q[0] = std::atan2(p_wc.y(), -p_wc.z());
  Eigen::Vector2d planar(p_wc.x(), reach_planar);
  Eigen::Vector2d q23 = fiveBarIk(limb.five_bar, planar, limb.branch);
  q[1] = q23.x();
  q[2] = q23.y();

  if (config == Configuration::Climbing6DoF) {
    FiveBarState st = fiveBarFk(limb.five_bar, q[1], q[2], limb.branch);
    Eigen::Matrix3d base = rotX(q[0]) * wristBase(st, limb.five_bar.l_front_lower_m);
    Eigen::Matrix3d rw = base.transpose() * target.rotation;
    // ZYX factorization: rw = Rz(q4) Ry(q5) Rx(q6).
    double c5 = std::hypot(rw(0, 0), rw(1, 0));
    if (c5 < limb.wrist.gimbal_guard_rad) {
      throw WristGimbalLock("wrist pitch within guard of +-90 deg");
    }
    q[4] = std::atan2(-rw(2, 0), c5);
    q[3] = std::atan2(rw(1, 0), rw(0, 0));
    q[5] = std::atan2(rw(2, 1), rw(2, 2));
  }

  if (opts.check_joint_limits) {
    int n = config == Configuration::Walking3DoF ? 3 : 6;
    for (int i = 0; i < n; ++i) {
      if (q[i] < model.joint_lower_rad[i] - 1e-12 || q[i] > model.joint_upper_rad[i] + 1e-12) {
        throw Unreachable("limb IK solution violates joint limits");
      }
    }
  }

  double mu = 0.0;
  {
    Matrix6d j = limbJacobian(limb, config, q);
    if (config == Configuration::Walking3DoF) {
      mu = std::abs(j.topLeftCorner<3, 3>().determinant());
    } else {
      mu = std::abs(j.determinant());
    }
  }
  if (mu < opts.near_singular_threshold) {
    throw NearSingular("limb IK solution has manipulability below threshold");
  }
  return q;
}

Vector6d limbIk(const RobotModel& model, LimbId id, const RigidTransform& target,
                const IkOptions& opts) {
  return limbIkAt(model, id, model.shoulderNeutral(id), target, opts);
}

Vector6d limbIkAt(const RobotModel& model, LimbId id, const RigidTransform& shoulder,
                  const RigidTransform& target, const IkOptions& opts) {
  return limbIkFromShoulder(model, model.limbs[limbIndex(id)], model.configuration,
                            shoulder.inverse() * target, opts);
}

Matrix6d limbJacobian(const LimbParams& limb, Configuration config, const Vector6d& q) {
  Matrix6d jac = Matrix6d::Zero();
  FiveBarJacobian fb = fiveBarJacobian(limb.five_bar, q[1], q[2], limb.branch);
  if (fb.degenerate) {
    return jac;  // uncontrolled closure freedom: treat all sensitivities as lost
  }
  FiveBarState st = fiveBarFk(limb.five_bar, q[1], q[2], limb.branch);
  Eigen::Matrix3d roll = rotX(q[0]);
  Eigen::Vector3d p_wc = roll * planarToLocal(st.end_point);

  if (config == Configuration::Walking3DoF) {
    Eigen::Vector3d a1 = Eigen::Vector3d::UnitX();
    jac.block<3, 1>(0, 0) = a1.cross(p_wc);
    jac.block<3, 1>(0, 1) = roll * planarToLocal(fb.dP_dq.col(0));
    jac.block<3, 1>(0, 2) = roll * planarToLocal(fb.dP_dq.col(1));
    return jac;
  }

  Eigen::Matrix3d base = wristBase(st, limb.five_bar.l_front_lower_m);
  Eigen::Matrix3d r_toe = roll * base * wristRotation(q);
  Eigen::Vector3d p_toe = p_wc + r_toe * Eigen::Vector3d(limb.wrist.toe_offset_m, 0, 0);
  Eigen::Vector3d lever = p_toe - p_wc;

  // q1: revolute about the shoulder x axis through the origin.
  Eigen::Vector3d a1 = Eigen::Vector3d::UnitX();
  jac.block<3, 1>(0, 0) = a1.cross(p_toe);
  jac.block<3, 1>(3, 0) = a1;

  // q2, q3: five-bar translation plus the wrist-mount rotation it induces.
  Eigen::Vector3d plane_normal = roll * Eigen::Vector3d::UnitY();
  for (int k = 0; k < 2; ++k) {
    Eigen::Vector3d v_wc = roll * planarToLocal(fb.dP_dq.col(k));
    Eigen::Vector3d omega = fb.dFrontDir_dq[k] * plane_normal;
    jac.block<3, 1>(0, 1 + k) = v_wc + omega.cross(lever);
    jac.block<3, 1>(3, 1 + k) = omega;
  }

  // Wrist axes (yaw about base z, pitch about the yawed y, roll about the
  // pitched x), all through the wrist center.
  Eigen::Matrix3d rb = roll * base;
  Eigen::Vector3d a4 = rb * Eigen::Vector3d::UnitZ();
  Eigen::Vector3d a5 = rb * rotZ(q[3]) * Eigen::Vector3d::UnitY();
  Eigen::Vector3d a6 = rb * rotZ(q[3]) * rotY(q[4]) * Eigen::Vector3d::UnitX();
  const std::array<std::pair<int, Eigen::Vector3d>, 3> wrist_axes = {
      std::pair<int, Eigen::Vector3d>{3, a4}, {4, a5}, {5, a6}};
  for (const auto& [col, axis] : wrist_axes) {
    jac.block<3, 1>(0, col) = axis.cross(lever);
    jac.block<3, 1>(3, col) = axis;
  }
  return jac;
}

double manipulability(const RobotModel& model, LimbId id, const Vector6d& q) {
  const LimbParams& limb = model.limbs[limbIndex(id)];
  Matrix6d j = limbJacobian(limb, model.configuration, q);
  if (model.configuration == Configuration::Walking3DoF) {
    return std::abs(j.topLeftCorner<3, 3>().determinant());
  }
  return std::abs(j.determinant());
}

}  // namespace scaler
