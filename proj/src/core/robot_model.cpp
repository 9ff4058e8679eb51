#include "scaler/core/robot_model.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace scaler {

using nlohmann::json;

const char* limbName(LimbId id) {
  switch (id) {
    case LimbId::FrontLeft: return "front_left";
    case LimbId::FrontRight: return "front_right";
    case LimbId::BackLeft: return "back_left";
    case LimbId::BackRight: return "back_right";
  }
  return "unknown";
}

std::string FourBarParams::grashofClass() const {
  // Parallelogram loop: rail pivot spacing twice, cross link twice.
  double s = std::min(rail_pivot_spacing_m, cross_link_length_m);
  double l = std::max(rail_pivot_spacing_m, cross_link_length_m);
  double sum_sl = s + l;
  double sum_pq = rail_pivot_spacing_m + cross_link_length_m;
  if (std::abs(sum_sl - sum_pq) < 1e-12) return "change-point (parallelogram)";
  return sum_sl < sum_pq ? "Grashof" : "non-Grashof";
}

RigidTransform RobotModel::shoulderNeutral(LimbId id) const {
  double fore = 0.5 * bodyLength();
  double half_w = shoulderHalfWidthNeutral();
  double x = (id == LimbId::FrontLeft || id == LimbId::FrontRight) ? fore : -fore;
  double y = (id == LimbId::FrontLeft || id == LimbId::BackLeft) ? half_w : -half_w;
  return RigidTransform::fromTranslation({x, y, 0.0});
}

void RobotModel::validate() const {
  auto require = [](bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(std::string("RobotModel: ") + what);
  };
  require(body_length_walking_m > 0 && body_length_climbing_m > 0, "body lengths must be positive");
  require(walking_mass_kg > 0, "walking mass must be positive");
  require(climbing_mass_kg > walking_mass_kg,
          "climbing mass must exceed walking mass (wrists and grippers added)");
  for (const auto& limb : limbs) {
    const auto& fb = limb.five_bar;
    require(fb.l_front_upper_m > 0 && fb.l_front_lower_m > 0 && fb.l_back_upper_m > 0 &&
                fb.l_back_lower_m > 0,
            "five-bar link lengths must be positive");
    require(fb.l_back_upper_m < fb.l_front_upper_m,
            "back upper link must be shorter than the front upper link");
    require(limb.wrist.toe_offset_m >= 0, "toe offset must be non-negative");
    require(std::abs(limb.branch.front_elbow_sign) == 1 && std::abs(limb.branch.back_elbow_sign) == 1,
            "branch signs must be +-1");
  }
  require(four_bar.cross_link_length_m > 0 && four_bar.rail_pivot_spacing_m > 0,
          "four-bar link lengths must be positive");
  require(four_bar.actuator_min_rad < four_bar.actuator_max_rad, "empty actuator range");
  require(four_bar.liftStroke() >= 0.075 - 1e-12, "four-bar stroke must cover a 0.075 m lift");
  require(goat.max_opening_m > goat.min_opening_m && goat.min_opening_m >= 0,
          "gripper opening range invalid");
  require(goat.passive_travel_m > 0, "gripper passive travel must be positive");
  require(goat.full_stroke_time_s > 0, "gripper stroke time must be positive");
  require(spine_cells.spines_per_cell > 0 && spine_cells.per_spine_shear_n > 0 &&
              spine_cells.engagement_scale_n > 0,
          "spine cell parameters must be positive");
  for (double v : joint_velocity_limit_rad_s) require(v > 0, "velocity limits must be positive");
  for (double t : joint_torque_limit_nm) require(t > 0, "torque limits must be positive");
  require(compression_cap_n > 0, "compression cap must be positive");
}

RobotModel defaultModel() {
  RobotModel m;
  // Calibrate the gripper lever so the nominal actuator force on the nominal
  // rail opening yields exactly 70 N per fingertip.
  double h = 0.5 * m.goat.nominal_opening_m;
  double lp = m.goat.push_link_length_m;
  double tan_theta = h / std::sqrt(lp * lp - h * h);
  m.goat.lever_ratio = 70.0 / (0.5 * m.goat.nominal_actuator_force_n * tan_theta);
  m.validate();
  return m;
}

RobotModel defaultWalkingModel() {
  RobotModel m = defaultModel();
  m.configuration = Configuration::Walking3DoF;
  return m;
}

namespace {

json fiveBarToJson(const FiveBarParams& p) {
  return json{{"l_front_upper_m", p.l_front_upper_m},
              {"l_front_lower_m", p.l_front_lower_m},
              {"l_back_upper_m", p.l_back_upper_m},
              {"l_back_lower_m", p.l_back_lower_m},
              {"motor_axis_offset_m", p.motor_axis_offset_m},
              {"front_motor_zero_rad", p.front_motor_zero_rad},
              {"back_motor_zero_rad", p.back_motor_zero_rad}};
}

FiveBarParams fiveBarFromJson(const json& j) {
  FiveBarParams p;
  p.l_front_upper_m = j.at("l_front_upper_m");
  p.l_front_lower_m = j.at("l_front_lower_m");
  p.l_back_upper_m = j.at("l_back_upper_m");
  p.l_back_lower_m = j.at("l_back_lower_m");
  p.motor_axis_offset_m = j.at("motor_axis_offset_m");
  p.front_motor_zero_rad = j.at("front_motor_zero_rad");
  p.back_motor_zero_rad = j.at("back_motor_zero_rad");
  return p;
}

}  // namespace

std::string toJson(const RobotModel& m) {
  json j;
  j["body_length_walking_m"] = m.body_length_walking_m;
  j["body_length_climbing_m"] = m.body_length_climbing_m;
  j["walking_mass_kg"] = m.walking_mass_kg;
  j["climbing_mass_kg"] = m.climbing_mass_kg;
  j["configuration"] = m.configuration == Configuration::Walking3DoF ? "walking_3dof" : "climbing_6dof";
  for (LimbId id : kAllLimbs) {
    const LimbParams& lp = m.limbs[limbIndex(id)];
    json jl;
    jl["five_bar"] = fiveBarToJson(lp.five_bar);
    jl["wrist"] = json{{"toe_offset_m", lp.wrist.toe_offset_m},
                       {"gimbal_guard_rad", lp.wrist.gimbal_guard_rad}};
    jl["branch"] = json{{"front_elbow_sign", lp.branch.front_elbow_sign},
                        {"back_elbow_sign", lp.branch.back_elbow_sign}};
    j["limbs"][limbName(id)] = jl;
  }
  j["four_bar"] = json{{"cross_link_length_m", m.four_bar.cross_link_length_m},
                       {"rail_pivot_spacing_m", m.four_bar.rail_pivot_spacing_m},
                       {"actuator_min_rad", m.four_bar.actuator_min_rad},
                       {"actuator_max_rad", m.four_bar.actuator_max_rad},
                       {"actuator_speed_rad_s", m.four_bar.actuator_speed_rad_s},
                       {"rail_base_separation_m", m.four_bar.rail_base_separation_m},
                       {"thrust_force_n", m.four_bar.thrust_force_n},
                       {"grashof_class", m.four_bar.grashofClass()}};
  j["goat"] = json{{"push_link_length_m", m.goat.push_link_length_m},
                   {"lever_ratio", m.goat.lever_ratio},
                   {"max_opening_m", m.goat.max_opening_m},
                   {"min_opening_m", m.goat.min_opening_m},
                   {"passive_travel_m", m.goat.passive_travel_m},
                   {"actuator_force_min_n", m.goat.actuator_force_min_n},
                   {"actuator_force_max_n", m.goat.actuator_force_max_n},
                   {"nominal_actuator_force_n", m.goat.nominal_actuator_force_n},
                   {"nominal_opening_m", m.goat.nominal_opening_m},
                   {"full_stroke_time_s", m.goat.full_stroke_time_s}};
  j["spine_cells"] = json{{"spines_per_cell", m.spine_cells.spines_per_cell},
                          {"spine_diameter_mm", m.spine_cells.spine_diameter_mm},
                          {"spring_rate_n_per_m", m.spine_cells.spring_rate_n_per_m},
                          {"engagement_scale_n", m.spine_cells.engagement_scale_n},
                          {"per_spine_shear_n", m.spine_cells.per_spine_shear_n},
                          {"cells_per_contact", m.spine_cells.cells_per_contact}};
  j["grasp_bound"] = json{{"intercept_n", m.grasp_bound.intercept_n},
                          {"slope_n_per_deg", m.grasp_bound.slope_n_per_deg},
                          {"slope_min_deg", m.grasp_bound.slope_min_deg},
                          {"slope_max_deg", m.grasp_bound.slope_max_deg}};
  j["joint_velocity_limit_rad_s"] = m.joint_velocity_limit_rad_s;
  j["joint_torque_limit_nm"] = m.joint_torque_limit_nm;
  j["joint_lower_rad"] = m.joint_lower_rad;
  j["joint_upper_rad"] = m.joint_upper_rad;
  j["compression_cap_n"] = m.compression_cap_n;
  j["com_offset_m"] = std::vector<double>{m.com_offset_m.x(), m.com_offset_m.y(), m.com_offset_m.z()};
  j["synthetic_geometry"] = m.synthetic_geometry;
  j["geometry_note"] = m.geometry_note;
  return j.dump(2);
}

RobotModel robotModelFromJson(const std::string& text) {
  json j = json::parse(text);
  RobotModel m;
  m.body_length_walking_m = j.at("body_length_walking_m");
  m.body_length_climbing_m = j.at("body_length_climbing_m");
  m.walking_mass_kg = j.at("walking_mass_kg");
  m.climbing_mass_kg = j.at("climbing_mass_kg");
  m.configuration = j.at("configuration") == "walking_3dof" ? Configuration::Walking3DoF
                                                            : Configuration::Climbing6DoF;
  for (LimbId id : kAllLimbs) {
    const json& jl = j.at("limbs").at(limbName(id));
    LimbParams lp;
    lp.five_bar = fiveBarFromJson(jl.at("five_bar"));
    lp.wrist.toe_offset_m = jl.at("wrist").at("toe_offset_m");
    lp.wrist.gimbal_guard_rad = jl.at("wrist").at("gimbal_guard_rad");
    lp.branch.front_elbow_sign = jl.at("branch").at("front_elbow_sign");
    lp.branch.back_elbow_sign = jl.at("branch").at("back_elbow_sign");
    m.limbs[limbIndex(id)] = lp;
  }
  const json& fb = j.at("four_bar");
  m.four_bar.cross_link_length_m = fb.at("cross_link_length_m");
  m.four_bar.rail_pivot_spacing_m = fb.at("rail_pivot_spacing_m");
  m.four_bar.actuator_min_rad = fb.at("actuator_min_rad");
  m.four_bar.actuator_max_rad = fb.at("actuator_max_rad");
  m.four_bar.actuator_speed_rad_s = fb.at("actuator_speed_rad_s");
  m.four_bar.rail_base_separation_m = fb.at("rail_base_separation_m");
  m.four_bar.thrust_force_n = fb.at("thrust_force_n");
  const json& g = j.at("goat");
  m.goat.push_link_length_m = g.at("push_link_length_m");
  m.goat.lever_ratio = g.at("lever_ratio");
  m.goat.max_opening_m = g.at("max_opening_m");
  m.goat.min_opening_m = g.at("min_opening_m");
  m.goat.passive_travel_m = g.at("passive_travel_m");
  m.goat.actuator_force_min_n = g.at("actuator_force_min_n");
  m.goat.actuator_force_max_n = g.at("actuator_force_max_n");
  m.goat.nominal_actuator_force_n = g.at("nominal_actuator_force_n");
  m.goat.nominal_opening_m = g.at("nominal_opening_m");
  m.goat.full_stroke_time_s = g.at("full_stroke_time_s");
  const json& sc = j.at("spine_cells");
  m.spine_cells.spines_per_cell = sc.at("spines_per_cell");
  m.spine_cells.spine_diameter_mm = sc.at("spine_diameter_mm");
  m.spine_cells.spring_rate_n_per_m = sc.at("spring_rate_n_per_m");
  m.spine_cells.engagement_scale_n = sc.at("engagement_scale_n");
  m.spine_cells.per_spine_shear_n = sc.at("per_spine_shear_n");
  m.spine_cells.cells_per_contact = sc.at("cells_per_contact");
  const json& gb = j.at("grasp_bound");
  m.grasp_bound.intercept_n = gb.at("intercept_n");
  m.grasp_bound.slope_n_per_deg = gb.at("slope_n_per_deg");
  m.grasp_bound.slope_min_deg = gb.at("slope_min_deg");
  m.grasp_bound.slope_max_deg = gb.at("slope_max_deg");
  m.joint_velocity_limit_rad_s = j.at("joint_velocity_limit_rad_s");
  m.joint_torque_limit_nm = j.at("joint_torque_limit_nm");
  m.joint_lower_rad = j.at("joint_lower_rad");
  m.joint_upper_rad = j.at("joint_upper_rad");
  m.compression_cap_n = j.at("compression_cap_n");
  auto com = j.at("com_offset_m");
  m.com_offset_m = Eigen::Vector3d(com[0], com[1], com[2]);
  m.synthetic_geometry = j.at("synthetic_geometry");
  m.geometry_note = j.at("geometry_note");
  m.validate();
  return m;
}

void saveRobotModel(const RobotModel& model, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open model file for writing: " + path);
  out << toJson(model) << "\n";
}

RobotModel loadRobotModel(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open model file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return robotModelFromJson(ss.str());
}

}  // namespace scaler
