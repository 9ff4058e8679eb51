#ifndef SCALER_CORE_ROBOT_MODEL_HPP_
#define SCALER_CORE_ROBOT_MODEL_HPP_

#include <array>
#include <string>

#include "scaler/core/transform.hpp"

namespace scaler {

enum class LimbId : int { FrontLeft = 0, FrontRight = 1, BackLeft = 2, BackRight = 3 };

constexpr std::array<LimbId, 4> kAllLimbs = {LimbId::FrontLeft, LimbId::FrontRight,
                                             LimbId::BackLeft, LimbId::BackRight};

inline int limbIndex(LimbId id) { return static_cast<int>(id); }
const char* limbName(LimbId id);

enum class Configuration { Walking3DoF, Climbing6DoF };

/// Planar five-bar geometry. The two motors share one axis when
/// motor_axis_offset_m is zero (the default). The back upper link is shorter
/// than the front one, which keeps the coincident-elbow condition out of the
/// working region. Motor zero datums place the all-zero joint vector at the
/// nominal working posture.
struct FiveBarParams {
  double l_front_upper_m = 0.17;
  double l_front_lower_m = 0.26;
  double l_back_upper_m = 0.1615;  // 5% shorter than the front upper link
  double l_back_lower_m = 0.26;
  double motor_axis_offset_m = 0.0;
  double front_motor_zero_rad = 45.0 * M_PI / 180.0;
  double back_motor_zero_rad = 135.0 * M_PI / 180.0;

  bool symmetric() const { return l_back_upper_m == l_front_upper_m && l_back_lower_m == l_front_lower_m; }
};

/// Chain assembly selector: sign of each elbow relative to the motor->endpoint
/// ray. Fixed per limb; inverse kinematics never changes it.
struct FiveBarBranch {
  int front_elbow_sign = -1;
  int back_elbow_sign = +1;
};

/// Spherical wrist (three concurrent axes, yaw-pitch-roll order) mounted on
/// the front lower link, plus the toe/grasp point offset along the approach
/// axis. Pitch within gimbal_guard_rad of +-90 deg is treated as gimbal lock.
struct WristParams {
  double toe_offset_m = 0.045;
  double gimbal_guard_rad = 1e-3;
};

struct LimbParams {
  FiveBarParams five_bar;
  WristParams wrist;
  FiveBarBranch branch;
};

/// Body-shifting four-bar: the two side rails are coupled by a pair of equal
/// cross links (a parallelogram), so one actuator angle sets the fore-aft
/// offset between the rails. Offsets are reported in the center-link frame.
struct FourBarParams {
  double cross_link_length_m = 0.15;
  double rail_pivot_spacing_m = 0.20;
  double actuator_min_rad = -30.0 * M_PI / 180.0;
  double actuator_max_rad = 30.0 * M_PI / 180.0;
  double actuator_speed_rad_s = 0.1232;
  double rail_base_separation_m = 0.10;
  double thrust_force_n = 30.0;

  /// Fore-aft offset of the right rail relative to the left at angle phi.
  double relativeOffset(double phi) const { return cross_link_length_m * std::sin(phi); }
  /// Lateral distance between the rails at angle phi.
  double railSeparation(double phi) const {
    return rail_base_separation_m + cross_link_length_m * std::cos(phi);
  }
  /// m of rail travel per rad of actuator rotation at neutral.
  double strokeGain() const { return cross_link_length_m; }
  /// Full relative rail stroke across the actuator range.
  double fullRelativeStroke() const {
    return relativeOffset(actuator_max_rad) - relativeOffset(actuator_min_rad);
  }
  /// Body-center advance available per lift phase (half the relative stroke).
  double liftStroke() const { return 0.5 * fullRelativeStroke(); }
  /// Grashof classification string for the parallelogram loop.
  std::string grashofClass() const;
};

/// Gripper drive linkage: a slider pushed by the linear actuator closes the
/// two fingers through push links; fingertip force follows from static
/// equilibrium of that linkage. lever_ratio is calibrated so the nominal
/// actuator force at the nominal rail opening produces 70 N per fingertip.
struct GoatParams {
  double push_link_length_m = 0.05;
  double lever_ratio = 2.3739;
  double max_opening_m = 0.0985;
  double min_opening_m = 0.004;
  double passive_travel_m = 0.020;
  double actuator_force_min_n = 0.0;
  double actuator_force_max_n = 150.0;
  double nominal_actuator_force_n = 100.0;
  double nominal_opening_m = 0.0508;  // two-inch rail
  double full_stroke_time_s = 8.0;
};

/// Spring-loaded spine cell: 50 spines per cell, engagement saturates with
/// fingertip normal force as 1 - exp(-N / engagement_scale).
struct SpineCellParams {
  int spines_per_cell = 50;
  double spine_diameter_mm = 0.93;
  double spring_rate_n_per_m = 5.0;  // 5 mN/mm
  double engagement_scale_n = 30.0;
  double per_spine_shear_n = 0.6;
  int cells_per_contact = 2;  // one cell per fingertip, two fingertips per gripper
};

/// Linear pull-off capacity model fitted against object surface slope.
struct GraspBound {
  double intercept_n = 58.0;
  double slope_n_per_deg = -2.0;
  double slope_min_deg = 0.0;
  double slope_max_deg = 25.0;
};

/// Full robot parameterization. The published figures cover masses, body
/// lengths, gripper timing and spine-cell hardware; link lengths and joint
/// limits are self-consistent nominal values (synthetic_geometry flags them).
struct RobotModel {
  double body_length_walking_m = 0.30;
  double body_length_climbing_m = 0.35;
  double walking_mass_kg = 6.3;
  double climbing_mass_kg = 9.6;
  Configuration configuration = Configuration::Climbing6DoF;
  std::array<LimbParams, 4> limbs;
  FourBarParams four_bar;
  GoatParams goat;
  SpineCellParams spine_cells;
  GraspBound grasp_bound;
  std::array<double, 6> joint_velocity_limit_rad_s = {6.0, 6.0, 6.0, 6.0, 6.0, 6.0};
  std::array<double, 6> joint_torque_limit_nm = {8.2, 8.2, 8.2, 4.1, 4.1, 4.1};
  std::array<double, 6> joint_lower_rad = {-M_PI_2, -1.8, -1.8, -M_PI, -1.45, -M_PI};
  std::array<double, 6> joint_upper_rad = {M_PI_2, 1.8, 1.8, M_PI, 1.45, M_PI};
  double compression_cap_n = 500.0;
  Eigen::Vector3d com_offset_m = Eigen::Vector3d::Zero();
  bool synthetic_geometry = true;
  std::string geometry_note =
      "link lengths, joint limits and grasp-bound coefficients are nominal "
      "calibration values, not measured hardware";

  double bodyLength() const {
    return configuration == Configuration::Walking3DoF ? body_length_walking_m
                                                       : body_length_climbing_m;
  }
  double mass() const {
    return configuration == Configuration::Walking3DoF ? walking_mass_kg : climbing_mass_kg;
  }
  /// Shoulder frame in the center-link body frame at the neutral shift.
  RigidTransform shoulderNeutral(LimbId id) const;
  double shoulderForeAft() const { return 0.5 * body_length_climbing_m; }
  double shoulderHalfWidthNeutral() const { return 0.5 * four_bar.railSeparation(0.0); }

  void validate() const;  // throws std::invalid_argument on a bad model
};

/// Calibrated nominal model (climbing configuration).
RobotModel defaultModel();
RobotModel defaultWalkingModel();

/// JSON persistence with explicit units in field names. Round trips are
/// bit-identical.
std::string toJson(const RobotModel& model);
RobotModel robotModelFromJson(const std::string& text);
void saveRobotModel(const RobotModel& model, const std::string& path);
RobotModel loadRobotModel(const std::string& path);

}  // namespace scaler

#endif  // SCALER_CORE_ROBOT_MODEL_HPP_
