#include "scaler/kin/five_bar.hpp"

#include <cmath>

#include "scaler/core/errors.hpp"

namespace scaler {

namespace {

double cross2(const Eigen::Vector2d& a, const Eigen::Vector2d& b) {
  return a.x() * b.y() - a.y() * b.x();
}

int signOf(double v) { return v >= 0.0 ? +1 : -1; }

struct Anchors {
  Eigen::Vector2d front_motor;
  Eigen::Vector2d back_motor;
  Eigen::Vector2d front_elbow;
  Eigen::Vector2d back_elbow;
  double alpha2;
  double alpha3;
};

Anchors anchors(const FiveBarParams& p, double q2, double q3) {
  Anchors a;
  a.front_motor = Eigen::Vector2d::Zero();
  a.back_motor = Eigen::Vector2d(-p.motor_axis_offset_m, 0.0);
  a.alpha2 = p.front_motor_zero_rad + q2;
  a.alpha3 = p.back_motor_zero_rad + q3;
  a.front_elbow = a.front_motor + p.l_front_upper_m * Eigen::Vector2d(std::cos(a.alpha2), std::sin(a.alpha2));
  a.back_elbow = a.back_motor + p.l_back_upper_m * Eigen::Vector2d(std::cos(a.alpha3), std::sin(a.alpha3));
  return a;
}

}  // namespace

FiveBarState fiveBarFk(const FiveBarParams& p, double q2, double q3, const FiveBarBranch& branch) {
  Anchors a = anchors(p, q2, q3);
  Eigen::Vector2d d = a.back_elbow - a.front_elbow;
  double dist = d.norm();
  double scale = p.l_front_lower_m + p.l_back_lower_m;

  if (dist < 1e-12 * scale) {
    throw ClosureInfeasible("five-bar elbow joints coincide; closure point is undetermined");
  }
  // Circle-circle intersection: distance a along d from E1, height h off it.
  double along = (dist * dist + p.l_front_lower_m * p.l_front_lower_m -
                  p.l_back_lower_m * p.l_back_lower_m) /
                 (2.0 * dist);
  double h2 = p.l_front_lower_m * p.l_front_lower_m - along * along;
  if (h2 < -1e-12 * scale * scale) {
    throw ClosureInfeasible("five-bar distal circles do not intersect");
  }
  double h = std::sqrt(std::max(h2, 0.0));
  Eigen::Vector2d dir = d / dist;
  Eigen::Vector2d perp(dir.y(), -dir.x());
  Eigen::Vector2d foot = a.front_elbow + along * dir;

  // Pick the intersection whose elbow sides match the requested branch.
  Eigen::Vector2d best = foot + h * perp;
  bool found = false;
  for (double s : {+1.0, -1.0}) {
    Eigen::Vector2d cand = foot + s * h * perp;
    int sf = signOf(cross2(cand - a.front_motor, a.front_elbow - a.front_motor));
    int sb = signOf(cross2(cand - a.back_motor, a.back_elbow - a.back_motor));
    if (sf == branch.front_elbow_sign && sb == branch.back_elbow_sign) {
      best = cand;
      found = true;
      break;
    }
  }
  if (!found) {
    // Straight-chain boundary: the side is ambiguous, keep the +h candidate.
    best = foot + h * perp;
  }
  return FiveBarState{best, a.front_elbow, a.back_elbow, a.alpha2, a.alpha3};
}

double fiveBarClosureResidual(const FiveBarParams& p, double q2, double q3,
                              const Eigen::Vector2d& end_point) {
  Anchors a = anchors(p, q2, q3);
  double r1 = std::abs((end_point - a.front_elbow).norm() - p.l_front_lower_m);
  double r2 = std::abs((end_point - a.back_elbow).norm() - p.l_back_lower_m);
  return std::max(r1, r2);
}

Eigen::Vector2d fiveBarIk(const FiveBarParams& p, const Eigen::Vector2d& target,
                          const FiveBarBranch& branch) {
  auto solveChain = [](const Eigen::Vector2d& rel, double upper, double lower, int side,
                       const char* chain) {
    double r = rel.norm();
    if (r > upper + lower + 1e-12 || r < std::abs(upper - lower) - 1e-12) {
      throw Unreachable(std::string("five-bar target outside the ") + chain + " chain annulus");
    }
    double c = (upper * upper + r * r - lower * lower) / (2.0 * upper * r);
    double gamma = std::acos(std::clamp(c, -1.0, 1.0));
    double phi = std::atan2(rel.y(), rel.x());
    return phi + side * gamma;
  };
  Eigen::Vector2d back_motor(-p.motor_axis_offset_m, 0.0);
  double alpha2 = solveChain(target, p.l_front_upper_m, p.l_front_lower_m,
                             branch.front_elbow_sign, "front");
  double alpha3 = solveChain(target - back_motor, p.l_back_upper_m, p.l_back_lower_m,
                             branch.back_elbow_sign, "back");
  return {alpha2 - p.front_motor_zero_rad, alpha3 - p.back_motor_zero_rad};
}

FiveBarJacobian fiveBarJacobian(const FiveBarParams& p, double q2, double q3,
                                const FiveBarBranch& branch) {
  {
    // The coincident-elbow condition leaves the distal pair free to rotate;
    // report it as a degenerate closure rather than letting FK throw.
    Anchors a = anchors(p, q2, q3);
    double scale = p.l_front_lower_m + p.l_back_lower_m;
    if ((a.back_elbow - a.front_elbow).norm() < 1e-12 * scale) {
      FiveBarJacobian jac;
      jac.dP_dq.setZero();
      jac.dFrontDir_dq.setZero();
      jac.degenerate = true;
      return jac;
    }
  }
  FiveBarState st = fiveBarFk(p, q2, q3, branch);
  Eigen::Vector2d u1 = st.end_point - st.front_elbow;  // front lower link
  Eigen::Vector2d u2 = st.end_point - st.back_elbow;   // back lower link
  Eigen::Vector2d e1p = p.l_front_upper_m * Eigen::Vector2d(-std::sin(st.front_angle_rad),
                                                            std::cos(st.front_angle_rad));
  Eigen::Vector2d e2p = p.l_back_upper_m * Eigen::Vector2d(-std::sin(st.back_angle_rad),
                                                           std::cos(st.back_angle_rad));
  // Differentiated closure: u1 . dP = u1 . dE1, u2 . dP = u2 . dE2.
  Eigen::Matrix2d A;
  A.row(0) = u1.transpose();
  A.row(1) = u2.transpose();
  double det_scale = p.l_front_lower_m * p.l_back_lower_m;
  double det = A.determinant();

  FiveBarJacobian jac;
  if (std::abs(det) < 1e-9 * det_scale) {
    jac.dP_dq.setZero();
    jac.dFrontDir_dq.setZero();
    jac.degenerate = true;
    return jac;
  }
  Eigen::Matrix2d B = Eigen::Matrix2d::Zero();
  B(0, 0) = u1.dot(e1p);
  B(1, 1) = u2.dot(e2p);
  jac.dP_dq = A.inverse() * B;

  // Rotation rate of the front lower-link direction per motor rate.
  Eigen::Vector2d w = u1 / p.l_front_lower_m;
  Eigen::Vector2d dw_dq2 = (jac.dP_dq.col(0) - e1p) / p.l_front_lower_m;
  Eigen::Vector2d dw_dq3 = jac.dP_dq.col(1) / p.l_front_lower_m;
  jac.dFrontDir_dq = Eigen::Vector2d(cross2(w, dw_dq2), cross2(w, dw_dq3));
  return jac;
}

double fiveBarManipulability(const FiveBarParams& p, double q2, double q3,
                             const FiveBarBranch& branch) {
  FiveBarJacobian jac = fiveBarJacobian(p, q2, q3, branch);
  if (jac.degenerate) return 0.0;
  return std::abs(jac.dP_dq.determinant());
}

}  // namespace scaler
