#ifndef SCALER_GRIPPER_GOAT_HPP_
#define SCALER_GRIPPER_GOAT_HPP_

#include <array>

#include "scaler/core/robot_model.hpp"

namespace scaler {

/// Result of passively closing on an object: the whippletree translates until
/// both fingers touch, which balances the two contact forces; the external
/// four-bar keeps the spine cells parallel throughout.
struct GraspAdaptation {
  double lateral_shift_m = 0.0;
  std::array<double, 2> finger_position_m = {0.0, 0.0};  // along the closing axis
  std::array<double, 2> finger_force_n = {0.0, 0.0};     // at the nominal actuator force
  std::array<double, 2> cell_orientation_rad = {0.0, 0.0};
};

/// Close on an object of the given width whose center sits offset from the
/// gripper axis. Throws OffsetExceedsTravel / ObjectTooWide.
GraspAdaptation adaptGrasp(const GoatParams& g, double object_center_offset_m,
                           double object_width_m);

/// Static-equilibrium force transmission of the drive linkage: actuator force
/// on the slider, per-fingertip normal force out. Monotone in the actuator
/// force at any fixed opening; nonlinear in the opening.
double fingertipForce(const GoatParams& g, double actuator_force_n, double opening_m);

/// Linear pull-off capacity vs object surface slope, clamped at zero.
/// Throws std::out_of_range outside the fitted slope range.
double maxWithstandingForce(const GraspBound& b, double surface_slope_deg);

/// Fraction of spines engaged at a given fingertip preload (saturating,
/// zero without preload).
double engagedFraction(const SpineCellParams& sc, double normal_force_n);

/// Tangential capacity of one spine cell at the given fingertip preload.
double spineShearCapacity(const SpineCellParams& sc, double normal_force_n);

/// Tangential capacity of one gripper contact (all cells).
double contactShearCapacity(const SpineCellParams& sc, double per_fingertip_preload_n);

/// Time to travel the given fraction of the full open-close stroke.
double gripperStrokeTime(const GoatParams& g, double stroke_fraction);

}  // namespace scaler

#endif  // SCALER_GRIPPER_GOAT_HPP_
