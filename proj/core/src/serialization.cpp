#include "rbopt/serialization.hpp"

namespace rbopt {

using nlohmann::json;

void to_json(json& j, const DesignVector& d) {
  j = json{{"x_r", d.x_r},
           {"y_r", d.y_r},
           {"z_r", d.z_r},
           {"gamma_rb", d.gamma_rb},
           {"x_b", d.x_b},
           {"y_b1", d.y_b1},
           {"y_b2", d.y_b2},
           {"clearance_c", d.clearance_c},
           {"l_rb", d.l_rb},
           {"gear_j", d.gear_j}};
}

void from_json(const json& j, DesignVector& d) {
  j.at("x_r").get_to(d.x_r);
  j.at("y_r").get_to(d.y_r);
  j.at("z_r").get_to(d.z_r);
  j.at("gamma_rb").get_to(d.gamma_rb);
  j.at("x_b").get_to(d.x_b);
  j.at("y_b1").get_to(d.y_b1);
  j.at("y_b2").get_to(d.y_b2);
  j.at("clearance_c").get_to(d.clearance_c);
  j.at("l_rb").get_to(d.l_rb);
  j.at("gear_j").get_to(d.gear_j);
}

void to_json(json& j, const BoundsSet& b) {
  j = json{{"lower", b.lower}, {"upper", b.upper}};
}

void from_json(const json& j, BoundsSet& b) {
  // Rebuild through the validating constructor.
  b = BoundsSet(j.at("lower").get<std::vector<double>>(),
                j.at("upper").get<std::vector<double>>());
}

void to_json(json& j, const FitnessWeights& w) {
  j = json{{"w1", w.w1}, {"w2", w.w2}, {"w3", w.w3},
           {"w4", w.w4}, {"w5", w.w5}, {"w6", w.w6},
           {"w7", w.w7}, {"w8", w.w8}, {"w9", w.w9}};
}

void from_json(const json& j, FitnessWeights& w) {
  w.w1 = j.value("w1", w.w1);
  w.w2 = j.value("w2", w.w2);
  w.w3 = j.value("w3", w.w3);
  w.w4 = j.value("w4", w.w4);
  w.w5 = j.value("w5", w.w5);
  w.w6 = j.value("w6", w.w6);
  w.w7 = j.value("w7", w.w7);
  w.w8 = j.value("w8", w.w8);
  w.w9 = j.value("w9", w.w9);
}

void to_json(json& j, const SoilParams& s) {
  j = json{{"n_exp", s.n_exp},   {"k_c", s.k_c},
           {"k_phi", s.k_phi},   {"cohesion_c", s.cohesion_c},
           {"phi", s.phi},       {"mu", s.mu}};
}

void from_json(const json& j, SoilParams& s) {
  s.n_exp = j.value("n_exp", s.n_exp);
  s.k_c = j.value("k_c", s.k_c);
  s.k_phi = j.value("k_phi", s.k_phi);
  s.cohesion_c = j.value("cohesion_c", s.cohesion_c);
  s.phi = j.value("phi", s.phi);
  s.mu = j.value("mu", s.mu);
}

void to_json(json& j, const ScenarioParams& s) {
  j = json{{"wheel_diameter", s.wheel_diameter},
           {"wheel_width", s.wheel_width},
           {"rover_mass", s.rover_mass},
           {"gravity", s.gravity},
           {"alpha", s.alpha},
           {"obstacle_h", s.obstacle_h},
           {"rough_threshold_c", s.rough_threshold_c},
           {"motor_resistance", s.motor_resistance},
           {"motor_gear", s.motor_gear},
           {"torque_const", s.torque_const},
           {"soil", s.soil},
           {"rolling_resistance", s.rolling_resistance},
           {"sinkage_use_max_normal", s.sinkage_use_max_normal}};
}

void from_json(const json& j, ScenarioParams& s) {
  s.wheel_diameter = j.value("wheel_diameter", s.wheel_diameter);
  s.wheel_width = j.value("wheel_width", s.wheel_width);
  s.rover_mass = j.value("rover_mass", s.rover_mass);
  s.gravity = j.value("gravity", s.gravity);
  if (j.contains("alpha")) j.at("alpha").get_to(s.alpha);
  s.obstacle_h = j.value("obstacle_h", s.obstacle_h);
  s.rough_threshold_c = j.value("rough_threshold_c", s.rough_threshold_c);
  s.motor_resistance = j.value("motor_resistance", s.motor_resistance);
  s.motor_gear = j.value("motor_gear", s.motor_gear);
  s.torque_const = j.value("torque_const", s.torque_const);
  if (j.contains("soil")) j.at("soil").get_to(s.soil);
  s.rolling_resistance = j.value("rolling_resistance", s.rolling_resistance);
  s.sinkage_use_max_normal =
      j.value("sinkage_use_max_normal", s.sinkage_use_max_normal);
}

void to_json(json& j, const MechanismState& m) {
  j = json{{"z_com", m.z_com},     {"x_rear", m.x_rear},
           {"x_bp", m.x_bp},       {"x1", m.x1},
           {"x2", m.x2},           {"s_bogie", m.s_bogie},
           {"gamma1", m.gamma1},   {"gamma2", m.gamma2},
           {"x_c", m.x_c}};
}

void to_json(json& j, const ForceState& f) {
  j = json{{"normals", f.normals},
           {"tractions", f.tractions},
           {"total_weight", f.total_weight}};
}

void to_json(json& j, const MetricsReport& r) {
  j = json{{"theta_lat", r.theta_lat},
           {"theta_long", r.theta_long},
           {"theta_stab", r.theta_stab},
           {"power_p", r.power_p},
           {"mu_star", r.mu_star},
           {"mu_spread", r.mu_spread},
           {"sinkage", r.sinkage},
           {"pitch", r.pitch},
           {"traff_height", r.traff_height},
           {"eps1", r.eps1},
           {"c_lat", r.c_lat},
           {"c_long", r.c_long},
           {"c_traff", r.c_traff},
           {"switch_s", r.switch_s}};
}

}  // namespace rbopt
