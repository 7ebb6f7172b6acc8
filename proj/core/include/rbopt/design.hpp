#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "rbopt/rng.hpp"

namespace rbopt {

/// Number of decision variables of the suspension design problem.
inline constexpr std::size_t kDesignDim = 10;

/// The ten decision variables of the rocker-bogie suspension.
///
/// Lengths are millimetres, gamma_rb is degrees, gear_j is dimensionless.
/// The two horizontal bogie offsets are equal by construction, so a single
/// x_b covers both bogie wheels.
struct DesignVector {
  double x_r = 0.0;          ///< rocker rear-arm horizontal reach
  double y_r = 0.0;          ///< rocker rear-arm vertical drop
  double z_r = 0.0;          ///< chassis height above the wheel axles
  double gamma_rb = 0.0;     ///< angle between the two rocker arms [deg]
  double x_b = 0.0;          ///< bogie-wheel horizontal half spacing
  double y_b1 = 0.0;         ///< front bogie-arm vertical drop
  double y_b2 = 0.0;         ///< rear bogie-arm vertical drop
  double clearance_c = 0.0;  ///< required ground clearance
  double l_rb = 0.0;         ///< lateral track between left/right rockers
  double gear_j = 0.0;       ///< differential gear ratio [-]
};

/// Per-coordinate box constraints. Generic in dimension so the optimizers
/// run on standard test functions as well as the 10-D design space.
struct BoundsSet {
  std::vector<double> lower;
  std::vector<double> upper;

  BoundsSet() = default;
  /// Throws std::invalid_argument unless lower[i] < upper[i] for all i.
  BoundsSet(std::vector<double> lo, std::vector<double> up);

  /// Uniform box [lo, hi]^dim.
  static BoundsSet uniform(std::size_t dim, double lo, double hi);

  std::size_t size() const { return lower.size(); }
  double range(std::size_t i) const { return upper[i] - lower[i]; }
};

/// Weights w1..w9 of the aggregated fitness.
struct FitnessWeights {
  double w1 = -2.0;  ///< switched virtual friction
  double w2 = -2.0;  ///< virtual-friction spread
  double w3 = 2.0;   ///< power (active on benign terrain only)
  double w4 = 1.0;   ///< lateral-stability indicator
  double w5 = 5.0;   ///< longitudinal-stability indicator
  double w6 = -3.0;  ///< load-equalization error
  double w7 = 2.0;   ///< trafficability indicator
  double w8 = -1.0;  ///< sinkage
  double w9 = -1.0;  ///< rover pitch
};

/// Bekker pressure-sinkage soil constants plus the wheel-ground friction
/// coefficient. Default values describe dry sand (0% moisture; moisture
/// itself plays no computational role and is not stored).
struct SoilParams {
  double n_exp = 1.10;      ///< sinkage exponent
  double k_c = 0.1;         ///< cohesive modulus [kN/m^(n+1)]
  double k_phi = 3.9;       ///< frictional modulus [kN/m^(n+2)]
  double cohesion_c = 0.15; ///< soil cohesion [kPa]
  double phi = 28.0;        ///< internal friction angle [deg]
  double mu = 0.6;          ///< wheel-ground friction coefficient
};

/// Fixed evaluation context: wheel, chassis mass, motor constants, terrain.
/// Lengths in millimetres, angles in degrees, SI elsewhere.
struct ScenarioParams {
  double wheel_diameter = 170.0;  ///< d_w [mm]
  double wheel_width = 75.0;      ///< b_w [mm]
  double rover_mass = 10.0;       ///< [kg]
  double gravity = 9.81;          ///< [m/s^2]
  /// Terrain inclination under each wheel [deg], ordered
  /// {left front-bogie, left mid-bogie, left rear, right front-bogie,
  ///  right mid-bogie, right rear}.
  std::array<double, 6> alpha = {15.0, 15.0, 15.0, 15.0, 15.0, 15.0};
  double obstacle_h = 170.0;        ///< step height to climb [mm]
  double rough_threshold_c = 10.0;  ///< rough/benign switching threshold [deg]
  double motor_resistance = 1.0;    ///< R_m [ohm]
  double motor_gear = 100.0;        ///< g_m [-]
  double torque_const = 0.01;       ///< K_t [N*m/A]
  SoilParams soil{};
  double rolling_resistance = 0.05;     ///< drawbar rolling-resistance factor
  bool sinkage_use_max_normal = false;  ///< sinkage load: W/6 or max wheel load

  double total_weight() const { return rover_mass * gravity; }
};

/// How an optimizer run picks its starting point.
enum class InitStrategy { LowerBound, UpperBound, Mean, Random };

const char* to_string(InitStrategy s);
InitStrategy init_strategy_from_string(const std::string& name);

/// The design-space box: X_r in [100,500], Y_r in [100,300], Z_r in
/// [100,200], gamma_rb in [90,180] deg, X_b in [100,200], Y_b1/Y_b2 in
/// [100,300], clearance in [20,100], L_rb in [50,500], gear in [1,5].
BoundsSet default_bounds();

/// Elementwise projection of x onto the box. Idempotent and monotone.
/// Throws std::invalid_argument on dimension mismatch.
std::vector<double> clamp(const std::vector<double>& x, const BoundsSet& b);

/// Starting point for a run; Random draws one uniform sample per coordinate.
std::vector<double> initial_point(InitStrategy strategy, const BoundsSet& b,
                                  Rng& rng);

/// Flat-vector coordinate order is (x_r, y_r, z_r, gamma_rb, x_b, y_b1,
/// y_b2, clearance_c, l_rb, gear_j); to_design/from_design round-trip.
DesignVector to_design(const std::vector<double>& x);
std::vector<double> from_design(const DesignVector& d);

}  // namespace rbopt
