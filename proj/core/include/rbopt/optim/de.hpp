#pragma once

#include "rbopt/optimizers.hpp"
#include "rbopt/rng.hpp"

namespace rbopt::de {

struct Population {
  std::vector<std::vector<double>> x;
  std::vector<double> f;
};

/// Member 0 starts at x0, the rest are uniform in the box. Costs
/// `population` evaluations.
Population init(const DeParams& hp, const std::vector<double>& x0,
                const BoundsSet& bounds, const Objective& fn, Rng& rng);

/// rand/1/bin generation: for each target, mutant = x_a + F (x_b - x_c)
/// over distinct a, b, c != target, binomial crossover with one forced
/// coordinate, clamp, then greedy one-to-one selection. Costs `population`
/// evaluations.
void generation(Population& pop, const DeParams& hp, const BoundsSet& bounds,
                const Objective& fn, Rng& rng);

}  // namespace rbopt::de
