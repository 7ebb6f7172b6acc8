#include "rbopt/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "rbopt/errors.hpp"

namespace rbopt {

namespace {

constexpr double kPi = 3.14159265358979323846;

double deg2rad(double deg) { return deg * kPi / 180.0; }
double rad2deg(double rad) { return rad * 180.0 / kPi; }

double max_abs_alpha(const ScenarioParams& s) {
  double m = 0.0;
  for (double a : s.alpha) m = std::max(m, std::abs(a));
  return m;
}

double mean_alpha(const ScenarioParams& s) {
  double sum = 0.0;
  for (double a : s.alpha) sum += a;
  return sum / 6.0;
}

}  // namespace

double lateral_stability(const MechanismState& m, const DesignVector& d) {
  return rad2deg(std::atan(0.5 * d.l_rb / m.z_com));
}

double longitudinal_stability(const MechanismState& m) {
  return rad2deg(std::atan(m.x_rear / m.z_com));
}

double stability_margin(double theta_l, double theta_r) {
  return std::min(theta_l, theta_r);
}

double power(const ForceState& f, const ScenarioParams& s) {
  if (s.torque_const == 0.0) {
    throw std::invalid_argument("power: torque constant must be nonzero");
  }
  const double r = 0.5 * s.wheel_diameter / 1000.0;  // wheel radius [m]
  double sum_sq = 0.0;
  for (double t : f.tractions) sum_sq += t * t;
  const double k = s.motor_resistance * s.motor_gear * s.motor_gear * r * r /
                   (s.torque_const * s.torque_const);
  return k * sum_sq;
}

FrictionResult virtual_friction(const ForceState& f) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < 6; ++i) {
    if (f.normals[i] <= 0.0) {
      // Airborne or unloaded wheel: slip is certain.
      const double inf = std::numeric_limits<double>::infinity();
      return {inf, inf};
    }
    const double ratio = f.tractions[i] / f.normals[i];
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
  }
  return {hi, hi - lo};
}

double sinkage(const ScenarioParams& s, double load_per_wheel_n,
               double incline_deg) {
  const SoilParams& soil = s.soil;
  const double b = s.wheel_width / 1000.0;    // [m]
  const double d = s.wheel_diameter / 1000.0; // [m]
  const double den =
      (3.0 - soil.n_exp) * (soil.k_c + b * soil.k_phi) * std::sqrt(d);
  if (!(den > 0.0)) {
    throw std::invalid_argument("sinkage: nonpositive soil denominator");
  }
  const double num =
      3.0 * (load_per_wheel_n / 1000.0) * std::cos(deg2rad(incline_deg));
  if (num <= 0.0) return 0.0;
  const double z_m = std::pow(num / den, 2.0 / (2.0 * soil.n_exp + 1.0));
  return z_m * 1000.0;
}

double pitch(const MechanismState& m) { return 0.5 * (m.gamma1 + m.gamma2); }

double trafficability(const ScenarioParams& s, const MechanismState& m) {
  const double r = 0.5 * s.wheel_diameter;
  const double h = s.obstacle_h;
  const double sb = m.s_bogie;
  if (sb <= h) return 0.0;  // the bogie cannot span the step

  const double root = std::sqrt(sb * sb - h * h);
  const double den = (h - r) * root - h * r;
  if (den == 0.0) return 0.0;
  const double ratio = (r * root + (h - r) * h) / den;
  return sb / std::sqrt(ratio * ratio + 1.0);
}

double load_eq_error(const MechanismState& m) {
  return m.x_c - 0.5 * (m.x1 + m.x2);
}

int switching(std::span<const double> alpha_deg, double threshold_deg) {
  double m = 0.0;
  for (double a : alpha_deg) m = std::max(m, std::abs(a));
  return m > threshold_deg ? 1 : 0;
}

IndicatorSet indicators(const MetricsReport& partial, const ForceState& f,
                        const ScenarioParams& s, const DesignVector& d) {
  const double steepest = max_abs_alpha(s);
  bool all_loaded = true;
  for (double n : f.normals) all_loaded = all_loaded && n > 0.0;

  IndicatorSet c;
  c.c_lat = partial.theta_lat >= steepest ? 1000.0 : 0.0;
  c.c_long = (partial.theta_long >= steepest && all_loaded) ? 1000.0 : 0.0;
  c.c_traff = partial.traff_height >= d.clearance_c ? 1000.0 : 0.0;
  return c;
}

MetricsReport evaluate_all(const DesignVector& d, const ScenarioParams& s) {
  const MechanismState m = solve_geometry(d, s);

  ForceState f = traction_forces(m, s);
  try {
    f.normals = normal_forces(m, s).normals;
  } catch (const InstabilityError&) {
    // All wheels reported unloaded; downstream metrics and indicators
    // treat the design as having failed longitudinal stability.
    f.normals.fill(0.0);
  }

  MetricsReport r;
  r.theta_lat = lateral_stability(m, d);
  r.theta_long = longitudinal_stability(m);
  r.theta_stab = stability_margin(r.theta_lat, r.theta_long);
  r.power_p = power(f, s);

  const FrictionResult fr = virtual_friction(f);
  r.mu_star = fr.mu_star;
  r.mu_spread = fr.mu_spread;

  double wheel_load = f.total_weight / 6.0;
  if (s.sinkage_use_max_normal) {
    wheel_load = *std::max_element(f.normals.begin(), f.normals.end());
  }
  r.sinkage = sinkage(s, wheel_load, mean_alpha(s));

  r.pitch = pitch(m);
  r.traff_height = trafficability(s, m);
  r.eps1 = load_eq_error(m);
  r.switch_s = switching(std::span<const double>(s.alpha), s.rough_threshold_c);

  const IndicatorSet c = indicators(r, f, s, d);
  r.c_lat = c.c_lat;
  r.c_long = c.c_long;
  r.c_traff = c.c_traff;
  return r;
}

}  // namespace rbopt
