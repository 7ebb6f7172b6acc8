#include "rbopt/mechanism.hpp"

#include <algorithm>
#include <cmath>

#include "rbopt/errors.hpp"

namespace rbopt {

namespace {

constexpr double kPi = 3.14159265358979323846;

double deg2rad(double deg) { return deg * kPi / 180.0; }

double mean(const double* v, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += v[i];
  return s / static_cast<double>(n);
}

}  // namespace

MechanismState solve_geometry(const DesignVector& d, const ScenarioParams& s) {
  const double arm = std::hypot(d.x_r, d.y_r);
  if (arm == 0.0) {
    throw GeometryError("solve_geometry: zero-length rocker arm");
  }

  // Rocker pivot at the origin; the rear arm ends at (-x_r, -y_r) and the
  // front arm is the rear arm rotated by the inter-arm angle gamma_rb.
  const double rear_dir = std::atan2(-d.y_r, -d.x_r);
  const double front_dir = rear_dir + deg2rad(d.gamma_rb);
  const double pivot_x = arm * std::cos(front_dir);

  MechanismState m;
  m.x_bp = std::abs(pivot_x);
  m.x_rear = d.x_r;
  m.z_com = d.z_r + 0.5 * s.wheel_diameter;
  m.s_bogie = std::hypot(2.0 * d.x_b, d.y_b1 - d.y_b2);
  m.x1 = m.x_bp + d.x_b;
  m.x2 = m.x_bp - d.x_b;
  m.x_c = m.x_bp;
  // Rockers tilt with the mean slope seen by their side's wheels.
  m.gamma1 = d.gamma_rb + mean(s.alpha.data(), 3);
  m.gamma2 = d.gamma_rb + mean(s.alpha.data() + 3, 3);
  return m;
}

ForceState normal_forces(const MechanismState& m, const ScenarioParams& s) {
  const double w = s.total_weight();
  const double lever = m.x_bp + m.x_rear;
  const double span = m.x1 - m.x2;
  if (lever <= 0.0 || span <= 0.0) {
    throw InstabilityError("normal_forces: degenerate support lever");
  }

  const double side = 0.5 * w;
  const double n_rear = side * m.x_bp / lever;
  const double n_pivot = side * m.x_rear / lever;
  const double n_front = n_pivot * (m.x_bp - m.x2) / span;
  const double n_mid = n_pivot * (m.x1 - m.x_bp) / span;

  ForceState f;
  f.total_weight = w;
  f.normals = {n_front, n_mid, n_rear, n_front, n_mid, n_rear};
  return f;
}

ForceState traction_forces(const MechanismState&, const ScenarioParams& s) {
  const double w = s.total_weight();
  const double slope = deg2rad(mean(s.alpha.data(), 6));
  const double pull =
      w * std::sin(slope) + s.rolling_resistance * w * std::cos(slope);

  ForceState f;
  f.total_weight = w;
  // Downhill grades need no drive traction at quasi-static speeds.
  f.tractions.fill(std::max(0.0, pull) / 6.0);
  return f;
}

ForceState solve_forces(const MechanismState& m, const ScenarioParams& s) {
  ForceState f = normal_forces(m, s);
  f.tractions = traction_forces(m, s).tractions;
  return f;
}

}  // namespace rbopt
