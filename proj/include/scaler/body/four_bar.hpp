#ifndef SCALER_BODY_FOUR_BAR_HPP_
#define SCALER_BODY_FOUR_BAR_HPP_

#include <array>

#include "scaler/core/robot_model.hpp"
#include "scaler/core/stance.hpp"

namespace scaler {

/// Body-shifting four-bar. The parallelogram couples the two side rails, so
/// the actuator angle fixes their relative fore-aft offset; the center link
/// (battery/IMU mount) sits at the rail midpoint and defines the body frame.
/// During a lift phase the anchor rail is held by its grasping limbs, so the
/// body frame advances in the world by half of the relative stroke; the
/// helpers below supply that bookkeeping.

/// Fore-aft rail offsets in the body (center-link) frame: {left, right}.
std::array<double, 2> railOffsets(const FourBarParams& p, double actuator_angle_rad);

/// Shoulder frames in the body frame for the given shift state.
/// Throws std::out_of_range when the angle leaves the actuator range and
/// std::invalid_argument when a Neutral state carries a non-zero angle.
std::array<RigidTransform, 4> shoulderFrames(const RobotModel& model, const ShiftState& s);

/// World-frame advance of the body (center link) along the climb axis when
/// the actuator sweeps phi0 -> phi1 with the anchor side held fixed.
double worldBodyAdvance(const FourBarParams& p, LiftSide lift_side, double phi0, double phi1);

/// World-frame advance of the lifted rail over the same sweep (twice the
/// body advance).
double liftedRailAdvance(const FourBarParams& p, LiftSide lift_side, double phi0, double phi1);

/// Thrust force along the climb axis contributed by the body posture
/// actuator: the rated value during an active lift, zero otherwise.
double bodyThrust(const FourBarParams& p, const ShiftState& s, bool lifting);

}  // namespace scaler

#endif  // SCALER_BODY_FOUR_BAR_HPP_
