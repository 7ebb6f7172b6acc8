#pragma once

#include "rbopt/optimizers.hpp"
#include "rbopt/rng.hpp"

namespace rbopt::pso {

struct Swarm {
  std::vector<std::vector<double>> x;
  std::vector<std::vector<double>> v;
  std::vector<std::vector<double>> pbest;
  std::vector<double> pbest_f;
  std::vector<double> gbest;
  double gbest_f = std::numeric_limits<double>::infinity();
};

/// Particle 0 starts at x0, the rest are uniform in the box; velocities
/// start at zero. Costs swarm_size evaluations.
Swarm init(const PsoParams& hp, const std::vector<double>& x0,
           const BoundsSet& bounds, const Objective& fn, Rng& rng);

/// Synchronous velocity/position update:
///   v <- omega v + c1 r1 (pbest - x) + c2 r2 (gbest - x),  x <- x + v
/// with independent uniforms per coordinate, velocity capped at
/// v_max_frac of each range and positions clamped to the box. The swarm
/// best is refreshed after the whole sweep. Costs swarm_size evaluations.
void step(Swarm& s, const PsoParams& hp, const BoundsSet& bounds,
          const Objective& fn, Rng& rng);

}  // namespace rbopt::pso
