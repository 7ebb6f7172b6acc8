#pragma once

#include "rbopt/optimizers.hpp"
#include "rbopt/rng.hpp"

namespace rbopt::bh {

struct State {
  std::vector<double> x;  ///< last accepted local minimum
  double fx = std::numeric_limits<double>::infinity();
};

/// One basin hop: perturb the accepted minimum by a uniform displacement of
/// displacement_frac of each range, run the simplex local search from
/// there (capped at max_evals objective calls), then Metropolis
/// accept/reject on the two minimum values.
void iterate(State& s, const BhParams& hp, const BoundsSet& bounds,
             const Objective& fn, std::uint64_t max_evals, Rng& rng);

}  // namespace rbopt::bh
