#ifndef SCALER_STAB_CONTACT_HPP_
#define SCALER_STAB_CONTACT_HPP_

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "scaler/core/robot_model.hpp"

namespace scaler {

/// One gripper contact for the quasi-static force problem. The admissible
/// force set replaces a friction cone: the pull component (tension along the
/// inward normal) is capped by the grasp bound at this surface slope, the
/// tangential component by the spine shear capacity at the squeeze preload,
/// and compression by the structural cap.
struct ContactSpec {
  Eigen::Vector3d position = Eigen::Vector3d::Zero();  // world, m
  Eigen::Vector3d normal = Eigen::Vector3d::UnitZ();   // outward surface normal
  Eigen::Vector3d tangent1 = Eigen::Vector3d::UnitX();
  Eigen::Vector3d tangent2 = Eigen::Vector3d::UnitY();
  double surface_slope_deg = 0.0;
  double preload_n = 70.0;  // per-fingertip squeeze
  LimbId limb = LimbId::FrontLeft;

  void validateBasis() const;  // throws when the frame is not orthonormal
};

/// Builds an orthonormal grasp frame around an outward normal.
ContactSpec makeContact(const Eigen::Vector3d& position, const Eigen::Vector3d& normal,
                        LimbId limb, double surface_slope_deg = 0.0, double preload_n = 70.0);

struct ExternalWrench {
  Eigen::Vector3d force = Eigen::Vector3d::Zero();   // N, world
  Eigen::Vector3d torque = Eigen::Vector3d::Zero();  // N m about the world origin
};

/// Gravity (+ payload) wrench of a point-mass robot.
ExternalWrench gravityWrench(double mass_kg, const Eigen::Vector3d& com_world,
                             const Eigen::Vector3d& gravity);

ExternalWrench operator+(const ExternalWrench& a, const ExternalWrench& b);

/// Net force/torque residual of a candidate force assignment.
std::pair<Eigen::Vector3d, Eigen::Vector3d> equilibriumResidual(
    const std::vector<ContactSpec>& contacts, const std::vector<Eigen::Vector3d>& forces,
    const ExternalWrench& external);

struct ContactSolution {
  bool feasible = false;
  std::vector<Eigen::Vector3d> forces;  // on the robot, world frame
  Eigen::Vector3d residual_force = Eigen::Vector3d::Zero();
  Eigen::Vector3d residual_torque = Eigen::Vector3d::Zero();
  double objective = 0.0;            // max per-contact force norm
  double worst_slack = 0.0;          // min admissible-set slack across contacts
};

/// Caps of the admissible set for one contact under the given model.
struct ContactCaps {
  double pull_n = 0.0;
  double shear_n = 0.0;
  double compression_n = 0.0;
};
ContactCaps contactCaps(const RobotModel& model, const ContactSpec& c);

/// Distributes the external wrench over the contacts: minimizes the maximum
/// per-contact force norm subject to equilibrium and the per-contact
/// admissible sets, then breaks ties toward the minimum sum of squared norms.
/// The thrust force is a known axial assist added to the external wrench.
ContactSolution distributeForces(const RobotModel& model, const std::vector<ContactSpec>& contacts,
                                 const ExternalWrench& external,
                                 const Eigen::Vector3d& thrust = Eigen::Vector3d::Zero());

}  // namespace scaler

#endif  // SCALER_STAB_CONTACT_HPP_
