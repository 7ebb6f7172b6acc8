#pragma once

#include <array>

#include "rbopt/design.hpp"

namespace rbopt {

/// Planar quasi-static pose of one side of the suspension. All horizontal
/// distances are measured from the vertical through the centre of mass,
/// positive toward the front of the rover; lengths in mm, angles in deg.
struct MechanismState {
  double z_com = 0.0;    ///< centre-of-mass height above ground
  double x_rear = 0.0;   ///< CoM to rear wheel contact
  double x_bp = 0.0;     ///< CoM to bogie pivot
  double x1 = 0.0;       ///< CoM to front bogie-wheel contact
  double x2 = 0.0;       ///< CoM to rear bogie-wheel contact (x1 > x2)
  double s_bogie = 0.0;  ///< bogie wheel-centre separation
  double gamma1 = 0.0;   ///< left rocker inclination
  double gamma2 = 0.0;   ///< right rocker inclination
  double x_c = 0.0;      ///< pivot distance used by load equalization
};

/// Per-wheel quasi-static forces in newtons. Wheel order matches
/// ScenarioParams::alpha: {LF-bogie, LM-bogie, LR, RF-bogie, RM-bogie, RR}.
struct ForceState {
  std::array<double, 6> normals{};
  std::array<double, 6> tractions{};
  double total_weight = 0.0;
};

/// Closed-form pose for a design on the given terrain. Pure; throws
/// GeometryError only for a zero-length rocker arm (impossible within the
/// default bounds).
MechanismState solve_geometry(const DesignVector& d, const ScenarioParams& s);

/// Splits the weight over the six contacts by moment balance: per side the
/// half weight divides between rear contact and bogie pivot, then the pivot
/// load divides between the two bogie wheels. Fills normals and
/// total_weight; throws InstabilityError when the rear-contact/pivot lever
/// is degenerate.
ForceState normal_forces(const MechanismState& m, const ScenarioParams& s);

/// Equal-share traction: the drawbar pull required against slope and
/// rolling resistance, divided evenly over the six wheels. Fills tractions
/// and total_weight.
ForceState traction_forces(const MechanismState& m, const ScenarioParams& s);

/// Both force systems in one state.
ForceState solve_forces(const MechanismState& m, const ScenarioParams& s);

}  // namespace rbopt
