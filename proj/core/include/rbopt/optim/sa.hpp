#pragma once

#include "rbopt/optimizers.hpp"
#include "rbopt/rng.hpp"

namespace rbopt::sa {

struct State {
  std::vector<double> x;
  double fx = std::numeric_limits<double>::infinity();
  double t = 0.0;   ///< current temperature
  double t0 = 0.0;  ///< starting temperature (fixes the proposal scale)
};

/// Metropolis rule: improvements always pass, a worsening of delta passes
/// with probability exp(-delta / temperature). Draws one uniform only when
/// delta > 0.
bool accept(double delta, double temperature, Rng& rng);

/// One gaussian proposal, clamped, with sigma = step_frac * range *
/// sqrt(t/t0) per coordinate, then Metropolis accept/reject on the current
/// point.
void step(State& s, const SaParams& hp, const BoundsSet& bounds,
          const Objective& fn, Rng& rng);

}  // namespace rbopt::sa
