#include "scaler/body/four_bar.hpp"

#include <cmath>
#include <stdexcept>

namespace scaler {

namespace {

void checkAngle(const FourBarParams& p, const ShiftState& s) {
  if (s.actuator_angle_rad < p.actuator_min_rad - 1e-12 ||
      s.actuator_angle_rad > p.actuator_max_rad + 1e-12) {
    throw std::out_of_range("four-bar actuator angle outside its range");
  }
  if (s.lift_side == LiftSide::Neutral && std::abs(s.actuator_angle_rad) > 1e-9) {
    throw std::invalid_argument("Neutral shift state requires the symmetric (zero) angle");
  }
}

}  // namespace

std::array<double, 2> railOffsets(const FourBarParams& p, double actuator_angle_rad) {
  double rel = p.relativeOffset(actuator_angle_rad);
  return {-0.5 * rel, +0.5 * rel};
}

std::array<RigidTransform, 4> shoulderFrames(const RobotModel& model, const ShiftState& s) {
  checkAngle(model.four_bar, s);
  auto [left, right] = railOffsets(model.four_bar, s.actuator_angle_rad);
  double half_w = 0.5 * model.four_bar.railSeparation(s.actuator_angle_rad);
  double fore = model.shoulderForeAft();

  std::array<RigidTransform, 4> frames;
  frames[limbIndex(LimbId::FrontLeft)] = RigidTransform::fromTranslation({fore + left, half_w, 0});
  frames[limbIndex(LimbId::FrontRight)] = RigidTransform::fromTranslation({fore + right, -half_w, 0});
  frames[limbIndex(LimbId::BackLeft)] = RigidTransform::fromTranslation({-fore + left, half_w, 0});
  frames[limbIndex(LimbId::BackRight)] = RigidTransform::fromTranslation({-fore + right, -half_w, 0});
  return frames;
}

double worldBodyAdvance(const FourBarParams& p, LiftSide lift_side, double phi0, double phi1) {
  if (lift_side == LiftSide::Neutral) return 0.0;
  // Anchor rail world-fixed: the body advances opposite the anchor rail's
  // body-frame motion.
  double rel0 = p.relativeOffset(phi0);
  double rel1 = p.relativeOffset(phi1);
  double sign = lift_side == LiftSide::Right ? +1.0 : -1.0;  // d(anchor offset)/d(rel)
  return sign * 0.5 * (rel1 - rel0);
}

double liftedRailAdvance(const FourBarParams& p, LiftSide lift_side, double phi0, double phi1) {
  return 2.0 * worldBodyAdvance(p, lift_side, phi0, phi1);
}

double bodyThrust(const FourBarParams& p, const ShiftState& s, bool lifting) {
  if (!lifting || s.lift_side == LiftSide::Neutral) return 0.0;
  return p.thrust_force_n;
}

}  // namespace scaler
