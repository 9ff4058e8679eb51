#include "scaler/gripper/goat.hpp"

#include <cmath>
#include <stdexcept>

#include "scaler/core/errors.hpp"

namespace scaler {

GraspAdaptation adaptGrasp(const GoatParams& g, double object_center_offset_m,
                           double object_width_m) {
  if (object_width_m > g.max_opening_m + 1e-12) {
    throw ObjectTooWide("object wider than the maximum gripper opening");
  }
  if (object_width_m < g.min_opening_m - 1e-12) {
    throw std::out_of_range("object narrower than the minimum gripper opening");
  }
  if (std::abs(object_center_offset_m) > g.passive_travel_m + 1e-12) {
    throw OffsetExceedsTravel("object offset exceeds the passive lateral travel");
  }
  GraspAdaptation a;
  a.lateral_shift_m = object_center_offset_m;
  a.finger_position_m = {object_center_offset_m - 0.5 * object_width_m,
                         object_center_offset_m + 0.5 * object_width_m};
  double f = fingertipForce(g, g.nominal_actuator_force_n, object_width_m);
  a.finger_force_n = {f, f};       // whippletree balance
  a.cell_orientation_rad = {0, 0};  // external four-bar keeps the cells parallel
  return a;
}

double fingertipForce(const GoatParams& g, double actuator_force_n, double opening_m) {
  if (opening_m < g.min_opening_m - 1e-12 || opening_m > g.max_opening_m + 1e-12) {
    throw std::out_of_range("gripper opening outside the admissible range");
  }
  double h = 0.5 * opening_m;
  double lp = g.push_link_length_m;
  if (h >= lp) {
    throw std::out_of_range("gripper opening beyond the push-link geometry");
  }
  double tan_theta = h / std::sqrt(lp * lp - h * h);
  return 0.5 * actuator_force_n * tan_theta * g.lever_ratio;
}

double maxWithstandingForce(const GraspBound& b, double surface_slope_deg) {
  if (surface_slope_deg < b.slope_min_deg - 1e-12 || surface_slope_deg > b.slope_max_deg + 1e-12) {
    throw std::out_of_range("surface slope outside the fitted bound range");
  }
  return std::max(0.0, b.intercept_n + b.slope_n_per_deg * surface_slope_deg);
}

double engagedFraction(const SpineCellParams& sc, double normal_force_n) {
  if (normal_force_n < 0.0) {
    throw std::invalid_argument("spine preload must be non-negative");
  }
  return 1.0 - std::exp(-normal_force_n / sc.engagement_scale_n);
}

double spineShearCapacity(const SpineCellParams& sc, double normal_force_n) {
  return engagedFraction(sc, normal_force_n) * sc.spines_per_cell * sc.per_spine_shear_n;
}

double contactShearCapacity(const SpineCellParams& sc, double per_fingertip_preload_n) {
  return sc.cells_per_contact * spineShearCapacity(sc, per_fingertip_preload_n);
}

double gripperStrokeTime(const GoatParams& g, double stroke_fraction) {
  if (stroke_fraction < 0.0 || stroke_fraction > 1.0) {
    throw std::invalid_argument("stroke fraction must lie in [0, 1]");
  }
  return stroke_fraction * g.full_stroke_time_s;
}

}  // namespace scaler
