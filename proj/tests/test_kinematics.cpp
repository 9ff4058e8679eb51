#include <doctest.h>

#include <cmath>
#include <random>

#include "scaler/core/errors.hpp"
#include "scaler/kin/five_bar.hpp"
#include "scaler/kin/limb.hpp"

using namespace scaler;

namespace {

// Independent closure oracle: scan + golden-section refine the angle of the
// front lower link until the back-chain distance constraint is met.
Eigen::Vector2d closureOracle(const FiveBarParams& p, double q2, double q3, bool wall_side) {
  double a2 = p.front_motor_zero_rad + q2;
  double a3 = p.back_motor_zero_rad + q3;
  Eigen::Vector2d e1 = p.l_front_upper_m * Eigen::Vector2d(std::cos(a2), std::sin(a2));
  Eigen::Vector2d e2 = Eigen::Vector2d(-p.motor_axis_offset_m, 0.0) +
                       p.l_back_upper_m * Eigen::Vector2d(std::cos(a3), std::sin(a3));
  auto mismatch = [&](double t) {
    Eigen::Vector2d cand = e1 + p.l_front_lower_m * Eigen::Vector2d(std::cos(t), std::sin(t));
    return std::abs((cand - e2).norm() - p.l_back_lower_m);
  };
  double best_t = 0.0, best_v = 1e9;
  for (int i = 0; i < 20000; ++i) {
    double t = -M_PI + 2.0 * M_PI * i / 20000.0;
    Eigen::Vector2d cand = e1 + p.l_front_lower_m * Eigen::Vector2d(std::cos(t), std::sin(t));
    bool side_ok = wall_side ? cand.y() >= e1.y() - p.l_front_lower_m * 0.2 : true;
    double v = mismatch(t);
    if (side_ok && v < best_v && cand.y() > 0.5 * (e1.y() + e2.y())) {
      best_v = v;
      best_t = t;
    }
  }
  double lo = best_t - 2.0 * M_PI / 20000.0, hi = best_t + 2.0 * M_PI / 20000.0;
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double c = hi - gr * (hi - lo), d = lo + gr * (hi - lo);
  for (int i = 0; i < 200; ++i) {
    if (mismatch(c) < mismatch(d)) {
      hi = d;
    } else {
      lo = c;
    }
    c = hi - gr * (hi - lo);
    d = lo + gr * (hi - lo);
  }
  double t = 0.5 * (lo + hi);
  return e1 + p.l_front_lower_m * Eigen::Vector2d(std::cos(t), std::sin(t));
}

FiveBarParams defaultFiveBar() { return defaultModel().limbs[0].five_bar; }
FiveBarBranch defaultBranch() { return defaultModel().limbs[0].branch; }

// Small-angle rotation error in rad; avoids the acos floor near identity.
double smallRotationError(const Eigen::Matrix3d& a, const Eigen::Matrix3d& b) {
  return ((a.transpose() * b) - Eigen::Matrix3d::Identity()).norm() / std::sqrt(2.0);
}

Vector6d randomWorkingConfig(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Vector6d q;
  q << 0.6 * u(rng), 0.5 * u(rng), 0.5 * u(rng), 2.0 * u(rng), 1.2 * u(rng), 2.0 * u(rng);
  return q;
}

}  // namespace

TEST_CASE("five-bar: symmetric links with mirrored motors land on the symmetry axis") {
  FiveBarParams p = defaultFiveBar();
  p.l_back_upper_m = p.l_front_upper_m;
  p.l_back_lower_m = p.l_front_lower_m;
  p.front_motor_zero_rad = 0.0;
  p.back_motor_zero_rad = 0.0;
  for (double a : {0.9, 1.2, 1.8}) {
    FiveBarState st = fiveBarFk(p, a, M_PI - a, defaultBranch());
    CHECK(std::abs(st.end_point.x()) < 1e-12);
  }
}

TEST_CASE("five-bar: equal joint offsets keep the upper links parallel; oracle cross-check") {
  FiveBarParams p = defaultFiveBar();  // co-axial motors, asymmetric uppers
  for (double q : {-0.3, 0.0, 0.4}) {
    FiveBarState st = fiveBarFk(p, q, q, defaultBranch());
    double a_front = std::atan2(st.front_elbow.y(), st.front_elbow.x());
    Eigen::Vector2d back_dir = st.back_elbow;  // back motor at origin (offset 0)
    double a_back = std::atan2(back_dir.y(), back_dir.x());
    double dihedral = std::remainder((p.front_motor_zero_rad + q) - (p.back_motor_zero_rad + q) -
                                         (a_front - a_back),
                                     2.0 * M_PI);
    CHECK(std::abs(dihedral) < 1e-12);  // both uppers rotated by the same offset

    Eigen::Vector2d oracle = closureOracle(p, q, q, true);
    CHECK((st.end_point - oracle).norm() < 1e-6);
  }
}

TEST_CASE("five-bar: near-full extension approaches the front chain length limit") {
  FiveBarParams p = defaultFiveBar();
  // Offset the back motor so the shorter back chain still reaches the front
  // chain's extension circle in this direction.
  p.motor_axis_offset_m = 0.05;
  double limit = p.l_front_upper_m + p.l_front_lower_m;
  Eigen::Vector2d target = (limit - 1e-8) * Eigen::Vector2d(std::cos(2.2), std::sin(2.2));
  Eigen::Vector2d q = fiveBarIk(p, target, defaultBranch());
  FiveBarState st = fiveBarFk(p, q.x(), q.y(), defaultBranch());
  CHECK(std::abs(st.end_point.norm() - limit) < 1e-6);
}

TEST_CASE("five-bar: infeasible closures throw") {
  FiveBarParams p = defaultFiveBar();
  SUBCASE("distal circles cannot reach each other") {
    p.motor_axis_offset_m = 2.0;  // back motor far behind
    CHECK_THROWS_AS(fiveBarFk(p, 0.0, 0.0, defaultBranch()), ClosureInfeasible);
  }
  SUBCASE("coincident elbow axes have no unique closure") {
    p.l_back_upper_m = p.l_front_upper_m;
    p.front_motor_zero_rad = 0.0;
    p.back_motor_zero_rad = 0.0;
    CHECK_THROWS_AS(fiveBarFk(p, 0.7, 0.7, defaultBranch()), ClosureInfeasible);
  }
  SUBCASE("IK outside the chain annulus") {
    double limit = p.l_front_upper_m + p.l_front_lower_m;
    CHECK_THROWS_AS(fiveBarIk(p, {0.0, limit + 0.01}, defaultBranch()), Unreachable);
  }
}

TEST_CASE("five-bar: closure residual below 1e-10 across the working box") {
  FiveBarParams p = defaultFiveBar();
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-0.7, 0.7);
  for (int i = 0; i < 2000; ++i) {
    double q2 = u(rng), q3 = u(rng);
    FiveBarState st = fiveBarFk(p, q2, q3, defaultBranch());
    CHECK(fiveBarClosureResidual(p, q2, q3, st.end_point) < 1e-10);
  }
}

TEST_CASE("five-bar: IK/FK round trip in the plane") {
  FiveBarParams p = defaultFiveBar();
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(-0.6, 0.6);
  for (int i = 0; i < 2000; ++i) {
    double q2 = u(rng), q3 = u(rng);
    FiveBarState st = fiveBarFk(p, q2, q3, defaultBranch());
    Eigen::Vector2d q = fiveBarIk(p, st.end_point, defaultBranch());
    CHECK(std::abs(q.x() - q2) < 1e-9);
    CHECK(std::abs(q.y() - q3) < 1e-9);
  }
}

TEST_CASE("limb FK: home pose matches the chain-composition oracle") {
  RobotModel m = defaultModel();
  Vector6d q = Vector6d::Zero();
  RigidTransform toe = limbFkFromShoulder(m.limbs[0], m.configuration, q);

  // Independent oracle: quaternion-based chain with the test's own closure.
  Eigen::Vector2d endp = closureOracle(m.limbs[0].five_bar, 0.0, 0.0, true);
  Eigen::Vector3d end_local(endp.x(), 0.0, -endp.y());
  double a2 = m.limbs[0].five_bar.front_motor_zero_rad;
  Eigen::Vector2d e1 = m.limbs[0].five_bar.l_front_upper_m *
                       Eigen::Vector2d(std::cos(a2), std::sin(a2));
  Eigen::Vector2d w2 = (endp - e1).normalized();
  Eigen::Vector3d x(w2.x(), 0.0, -w2.y());
  Eigen::Vector3d y = Eigen::Vector3d::UnitY();
  Eigen::Matrix3d base;
  base.col(0) = x;
  base.col(1) = y;
  base.col(2) = x.cross(y);
  Eigen::Vector3d toe_oracle = end_local + base * Eigen::Vector3d(m.limbs[0].wrist.toe_offset_m, 0, 0);

  CHECK((toe.translation - toe_oracle).norm() < 1e-9);
  CHECK((toe.rotation - base).norm() < 1e-9);

  // Frozen golden value from the oracle above (shoulder frame, default model).
  Eigen::Vector3d frozen(-0.024257905047980, 0.0, -0.388824157777904);
  CHECK((toe.translation - frozen).norm() < 1e-9);
}

TEST_CASE("limb FK: shoulder roll rotates the toe about the climb axis") {
  RobotModel m = defaultModel();
  Vector6d q = Vector6d::Zero();
  q << 0.0, 0.1, -0.2, 0.3, 0.4, -0.1;
  RigidTransform base = limbFkFromShoulder(m.limbs[0], m.configuration, q);
  double delta = 0.37;
  q[0] += delta;
  RigidTransform rolled = limbFkFromShoulder(m.limbs[0], m.configuration, q);
  Eigen::Matrix3d rx = rotX(delta);
  CHECK((rolled.translation - rx * base.translation).norm() < 1e-12);
  CHECK((rolled.rotation - rx * base.rotation).norm() < 1e-12);
}

TEST_CASE("limb FK: walking configuration uses point-foot identity orientation") {
  RobotModel m = defaultWalkingModel();
  Vector6d q = Vector6d::Zero();
  q << 0.2, 0.1, -0.1, 0.5, 0.5, 0.5;  // wrist values must be ignored
  RigidTransform toe = limbFkFromShoulder(m.limbs[0], m.configuration, q);
  CHECK((toe.rotation - Eigen::Matrix3d::Identity()).norm() == 0.0);
}

TEST_CASE("limb IK: round trip recovers the configuration") {
  RobotModel m = defaultModel();
  std::mt19937_64 rng(99);
  int tested = 0;
  for (int i = 0; i < 2000; ++i) {
    Vector6d q = randomWorkingConfig(rng);
    RigidTransform target;
    try {
      target = limbFk(m, LimbId::FrontLeft, q);
    } catch (const ClosureInfeasible&) {
      continue;
    }
    Vector6d back;
    try {
      back = limbIk(m, LimbId::FrontLeft, target);
    } catch (const NearSingular&) {
      continue;
    } catch (const WristGimbalLock&) {
      continue;
    } catch (const Unreachable&) {
      continue;
    }
    ++tested;
    CHECK((back - q).cwiseAbs().maxCoeff() < 1e-9);
    RigidTransform again = limbFk(m, LimbId::FrontLeft, back);
    CHECK((again.translation - target.translation).norm() < 1e-9);
    CHECK(smallRotationError(again.rotation, target.rotation) < 1e-9);
  }
  CHECK(tested > 1500);  // the sampler must mostly produce valid working configs
}

TEST_CASE("limb IK: unreachable and singular targets throw") {
  RobotModel m = defaultModel();
  const auto& fb = m.limbs[0].five_bar;
  double reach = fb.l_front_upper_m + fb.l_front_lower_m + m.limbs[0].wrist.toe_offset_m;

  SUBCASE("target beyond maximum reach") {
    RigidTransform target = RigidTransform::fromTranslation({0.0, 0.0, -(reach + 0.05)});
    CHECK_THROWS_AS(limbIkFromShoulder(m, m.limbs[0], m.configuration, target), Unreachable);
  }
  SUBCASE("coincident-elbow demand reports near-singularity") {
    // Symmetric linkage with both chains solved on the same side folds the
    // elbows onto one axis.
    RobotModel sym = m;
    sym.limbs[0].five_bar.l_back_upper_m = sym.limbs[0].five_bar.l_front_upper_m;
    sym.limbs[0].five_bar.front_motor_zero_rad = 0.0;
    sym.limbs[0].five_bar.back_motor_zero_rad = 0.0;
    sym.limbs[0].branch.back_elbow_sign = sym.limbs[0].branch.front_elbow_sign;
    Eigen::Vector2d planar(0.05, 0.28);
    Eigen::Vector2d q23 = fiveBarIk(sym.limbs[0].five_bar, planar, sym.limbs[0].branch);
    CHECK(std::abs(q23.x() - q23.y()) < 1e-9);  // same-side solve folds the chains together
    CHECK(fiveBarManipulability(sym.limbs[0].five_bar, q23.x(), q23.y(), sym.limbs[0].branch) <
          1e-6);
    RigidTransform target = RigidTransform::fromTranslation({planar.x(), 0.0, -planar.y()});
    RobotModel sym_walk = sym;
    sym_walk.configuration = Configuration::Walking3DoF;
    CHECK_THROWS_AS(
        limbIkFromShoulder(sym_walk, sym_walk.limbs[0], sym_walk.configuration, target),
        NearSingular);
  }
  SUBCASE("wrist gimbal lock") {
    // Build a pose whose wrist decomposition needs pitch at +90 deg.
    Vector6d q = Vector6d::Zero();
    q << 0.1, 0.2, -0.1, 0.3, M_PI_2, 0.2;
    RigidTransform target = limbFk(m, LimbId::FrontLeft, q);
    CHECK_THROWS_AS(limbIk(m, LimbId::FrontLeft, target), WristGimbalLock);
  }
}

TEST_CASE("manipulability: aligned elbows are singular, the home pose is not") {
  RobotModel m = defaultModel();

  RobotModel sym = m;
  sym.limbs[0].five_bar.l_back_upper_m = sym.limbs[0].five_bar.l_front_upper_m;
  sym.limbs[0].five_bar.front_motor_zero_rad = 0.0;
  sym.limbs[0].five_bar.back_motor_zero_rad = 0.0;
  Vector6d q_sing = Vector6d::Zero();
  q_sing << 0.0, 0.8, 0.8, 0.0, 0.3, 0.0;
  CHECK(manipulability(sym, LimbId::FrontLeft, q_sing) < 1e-6);

  CHECK(manipulability(m, LimbId::FrontLeft, Vector6d::Zero()) > 0.01);
}

TEST_CASE("manipulability: asymmetry clears the operating box that the symmetric variant cannot") {
  RobotModel m = defaultModel();
  FiveBarParams asym = m.limbs[0].five_bar;
  FiveBarParams sym = asym;
  sym.l_back_upper_m = sym.l_front_upper_m;

  // Operating box in joint space, gridded so the coincident-elbow line
  // (alpha2 == alpha3, i.e. q2 - q3 = 90 deg with the default datums) is hit.
  double lo = -45.0 * M_PI / 180.0, hi = 45.0 * M_PI / 180.0;
  int n = 7;  // 15 deg steps, includes the (45, -45) coincidence pair
  double min_sym = 1e9, min_asym = 1e9;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double q2 = lo + (hi - lo) * i / (n - 1);
      double q3 = lo + (hi - lo) * j / (n - 1);
      min_sym = std::min(min_sym, fiveBarManipulability(sym, q2, q3, defaultBranch()));
      try {
        min_asym = std::min(min_asym, fiveBarManipulability(asym, q2, q3, defaultBranch()));
      } catch (const ClosureInfeasible&) {
        // outside the asymmetric closure range: not part of its workspace
      }
    }
  }
  CHECK(min_sym < 1e-6);     // the singular set crosses the box
  CHECK(min_asym > 1e-4);    // the shorter back link clears it
}

TEST_CASE("limb Jacobian matches central finite differences") {
  RobotModel m = defaultModel();
  std::mt19937_64 rng(1234);
  const double h = 1e-6;
  int tested = 0;
  double worst = 0.0;
  for (int i = 0; i < 1000 && tested < 400; ++i) {
    Vector6d q = randomWorkingConfig(rng);
    Matrix6d jac;
    RigidTransform t0;
    try {
      t0 = limbFkFromShoulder(m.limbs[0], m.configuration, q);
      jac = limbJacobian(m.limbs[0], m.configuration, q);
    } catch (const ClosureInfeasible&) {
      continue;
    }
    if (std::abs(jac.determinant()) < 1e-4) continue;  // stay off singular shells
    ++tested;
    for (int k = 0; k < 6; ++k) {
      Vector6d qp = q, qm = q;
      qp[k] += h;
      qm[k] -= h;
      RigidTransform tp, tm;
      try {
        tp = limbFkFromShoulder(m.limbs[0], m.configuration, qp);
        tm = limbFkFromShoulder(m.limbs[0], m.configuration, qm);
      } catch (const ClosureInfeasible&) {
        --tested;
        break;
      }
      Eigen::Vector3d v_fd = (tp.translation - tm.translation) / (2.0 * h);
      Eigen::Matrix3d dr = (tp.rotation - tm.rotation) / (2.0 * h);
      Eigen::Vector3d w_fd = unskew(dr * t0.rotation.transpose());
      worst = std::max(worst, (jac.block<3, 1>(0, k) - v_fd).cwiseAbs().maxCoeff());
      worst = std::max(worst, (jac.block<3, 1>(3, k) - w_fd).cwiseAbs().maxCoeff());
    }
  }
  CHECK(tested >= 300);
  CHECK(worst < 1e-5);
}

TEST_CASE("FK/IK round trip over many samples stays under 1e-9 m") {
  RobotModel m = defaultModel();
  std::mt19937_64 rng(5150);
  int tested = 0;
  double worst = 0.0;
  while (tested < 2000) {
    Vector6d q = randomWorkingConfig(rng);
    try {
      RigidTransform pose = limbFk(m, LimbId::FrontLeft, q);
      Vector6d qr = limbIk(m, LimbId::FrontLeft, pose);
      RigidTransform pose2 = limbFk(m, LimbId::FrontLeft, qr);
      worst = std::max(worst, (pose2.translation - pose.translation).norm());
      ++tested;
    } catch (const std::runtime_error&) {
      continue;
    }
  }
  CHECK(worst < 1e-9);
}
