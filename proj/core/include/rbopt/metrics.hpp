#pragma once

#include <span>

#include "rbopt/mechanism.hpp"

namespace rbopt {

/// The nine performance metrics plus indicator and switching terms for one
/// design under one scenario. Angles deg, lengths mm, power watts.
struct MetricsReport {
  double theta_lat = 0.0;     ///< lateral tip-over angle
  double theta_long = 0.0;    ///< longitudinal tip-over angle
  double theta_stab = 0.0;    ///< min of the two stability angles
  double power_p = 0.0;       ///< drive power for the required traction
  double mu_star = 0.0;       ///< worst traction/normal ratio over wheels
  double mu_spread = 0.0;     ///< max-min spread of the per-wheel ratios
  double sinkage = 0.0;       ///< z_rw, rigid-wheel sinkage
  double pitch = 0.0;         ///< theta_rover, chassis pitch
  double traff_height = 0.0;  ///< z_t, obstacle-clearing height margin
  double eps1 = 0.0;          ///< signed load-equalization error
  double c_lat = 0.0;         ///< 1000 when laterally stable, else 0
  double c_long = 0.0;        ///< 1000 when longitudinally stable, else 0
  double c_traff = 0.0;       ///< 1000 when the obstacle is clearable, else 0
  int switch_s = 0;           ///< 1 on rough terrain, 0 on benign
};

/// Largest lateral slope the rover tolerates before tipping, from the half
/// track l_rb/2 against the CoM height. Degrees.
double lateral_stability(const MechanismState& m, const DesignVector& d);

/// Largest pitch slope before rearward tip-over. Degrees. Wheel-contact
/// loading (all N_i > 0) is checked separately by the indicators.
double longitudinal_stability(const MechanismState& m);

/// The governing stability angle: min of the lateral and longitudinal ones.
double stability_margin(double theta_l, double theta_r);

/// Motor dissipation for the commanded tractions,
/// P = R_m g_m^2 r^2 / K_t^2 * sum T_i^2 with r the wheel radius in metres.
/// Throws std::invalid_argument when the torque constant is zero.
double power(const ForceState& f, const ScenarioParams& s);

struct FrictionResult {
  double mu_star = 0.0;
  double mu_spread = 0.0;
};

/// Worst-case and spread of the per-wheel traction/normal ratios. Any
/// unloaded wheel (N_i <= 0) yields an infinite mu_star sentinel.
FrictionResult virtual_friction(const ForceState& f);

/// Static sinkage of a rigid wheel in weak soil,
/// z = (3 W cos(theta) / ((3-n)(k_c + b k_phi) sqrt(d)))^(2/(2n+1)).
/// Evaluated in SI (kN, m); load in newtons, incline in degrees, result mm.
/// Throws std::invalid_argument when the soil denominator is not positive.
double sinkage(const ScenarioParams& s, double load_per_wheel_n,
               double incline_deg);

/// Chassis pitch: mean of the two rocker inclinations. Degrees.
double pitch(const MechanismState& m);

/// Height margin z_t of the wheel centres over a step of height obstacle_h
/// spanned by the bogie. Returns 0 when the bogie cannot span the step or
/// the contact geometry degenerates. Both radicals use s^2 - h^2; the
/// step-climb geometry is dimensionally consistent only with the squared
/// height. Millimetres.
double trafficability(const ScenarioParams& s, const MechanismState& m);

/// Signed distance of the pivot from the midpoint of the bogie contacts,
/// eps1 = x_c - (x1 + x2)/2. Zero means perfectly equalized load.
double load_eq_error(const MechanismState& m);

/// Rough/benign terrain switch: 1 iff max|alpha_i| strictly exceeds the
/// threshold.
int switching(std::span<const double> alpha_deg, double threshold_deg);

struct IndicatorSet {
  double c_lat = 0.0;
  double c_long = 0.0;
  double c_traff = 0.0;
};

/// Indicator bonuses: 1000 when the respective requirement holds. Lateral
/// and longitudinal stability must cover the steepest wheel inclination;
/// longitudinal additionally requires every wheel loaded; trafficability
/// requires z_t at least the design clearance.
IndicatorSet indicators(const MetricsReport& partial, const ForceState& f,
                        const ScenarioParams& s, const DesignVector& d);

/// Full metric evaluation for one design: geometry, forces, all nine
/// metrics, indicators and switching. Pure and deterministic. A design
/// whose force balance fails reports unloaded wheels (infinite mu_star,
/// longitudinal indicator off).
MetricsReport evaluate_all(const DesignVector& d, const ScenarioParams& s);

}  // namespace rbopt
