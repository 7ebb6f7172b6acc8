#pragma once

#include <cstdint>

#include "rbopt/optimizers.hpp"
#include "rbopt/rng.hpp"

namespace rbopt::da {

/// Fast-annealing visiting temperature,
///   T(t) = T0 (2^(q-1) - 1) / ((1+t)^(q-1) - 1),
/// so T(1) = T0 and T decays polynomially with the step index.
double visiting_temperature(double t0, double q_visit, std::uint64_t t);

/// One heavy-tailed Tsallis displacement. Sampled as gaussian / (s sqrt(g))
/// with g ~ Gamma((3-q)/(2(q-1))) and s = sqrt(2(q-1)) / T^(1/(3-q)), which
/// reproduces the generalized visiting distribution for 1 < q < 3.
double sample_jump(double q_visit, double t_visit, Rng& rng);

/// Generalized Metropolis: improvements always pass; a worsening of delta
/// passes with probability (1 + (q_a - 1) delta / t_accept)^(1/(1 - q_a)),
/// zero when the base is not positive.
bool accept(double delta, double q_accept, double t_accept, Rng& rng);

struct State {
  std::vector<double> x;
  double fx = std::numeric_limits<double>::infinity();
  std::uint64_t t = 1;  ///< annealing step index
};

/// One annealing step at the current index: first dim full-vector
/// proposals (one gamma draw each, shared over the coordinates), then dim
/// single-coordinate proposals, all scaled by the coordinate ranges and
/// clamped to the box, accepted at temperature T(t)/t. Costs 2*dim
/// evaluations and advances the index.
void step(State& s, const DaParams& hp, const BoundsSet& bounds,
          const Objective& fn, Rng& rng);

}  // namespace rbopt::da
