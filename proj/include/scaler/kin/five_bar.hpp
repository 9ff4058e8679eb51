#ifndef SCALER_KIN_FIVE_BAR_HPP_
#define SCALER_KIN_FIVE_BAR_HPP_

#include <Eigen/Dense>

#include "scaler/core/robot_model.hpp"

namespace scaler {

/// Planar five-bar chain solvers.
///
/// Plane coordinates: e1 points along the climb axis, e2 from the shoulder
/// toward the wall. The front motor sits at the origin, the back motor at
/// (-motor_axis_offset, 0). Joint values are offsets from the motor zero
/// datums stored in FiveBarParams, so q2 = q3 = 0 is the nominal working
/// posture.

struct FiveBarState {
  Eigen::Vector2d end_point;    // closure point P
  Eigen::Vector2d front_elbow;  // E1
  Eigen::Vector2d back_elbow;   // E2
  double front_angle_rad;       // absolute planar angle of the front upper link
  double back_angle_rad;
};

/// Forward kinematics by circle intersection. Throws ClosureInfeasible when
/// the distal circles do not intersect or the elbow axes coincide (the
/// degenerate symmetric condition, where the closure has no unique solution).
FiveBarState fiveBarFk(const FiveBarParams& p, double q2, double q3, const FiveBarBranch& branch);

/// Largest residual of the two chain closure equations at (q2, q3, P).
double fiveBarClosureResidual(const FiveBarParams& p, double q2, double q3,
                              const Eigen::Vector2d& end_point);

/// Inverse kinematics for a planar target. Each chain is solved on its own
/// branch side; throws Unreachable when the target leaves either chain's
/// annulus.
Eigen::Vector2d fiveBarIk(const FiveBarParams& p, const Eigen::Vector2d& target,
                          const FiveBarBranch& branch);

struct FiveBarJacobian {
  Eigen::Matrix2d dP_dq;          // end-point velocity per motor rate
  Eigen::Vector2d dFrontDir_dq;   // rotation rate of the front lower link per motor rate
  bool degenerate = false;        // closure matrix singular (coincident-elbow condition)
};

/// Analytic differential kinematics from the closure constraints. When the
/// closure matrix is singular the mechanism has an uncontrolled distal
/// freedom; degenerate is set and the matrices are zero.
FiveBarJacobian fiveBarJacobian(const FiveBarParams& p, double q2, double q3,
                                const FiveBarBranch& branch);

/// sqrt(det(J J^T)) of the planar end-point Jacobian; zero at degenerate
/// closures.
double fiveBarManipulability(const FiveBarParams& p, double q2, double q3,
                             const FiveBarBranch& branch);

}  // namespace scaler

#endif  // SCALER_KIN_FIVE_BAR_HPP_
