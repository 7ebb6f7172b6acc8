#pragma once

#include "rbopt/optimizers.hpp"
#include "rbopt/rng.hpp"

namespace rbopt::ga {

struct Population {
  std::vector<std::vector<double>> x;
  std::vector<double> f;
};

/// Member 0 starts at x0, the rest are uniform in the box. Costs
/// `population` evaluations.
Population init(const GaParams& hp, const std::vector<double>& x0,
                const BoundsSet& bounds, const Objective& fn, Rng& rng);

/// One generational turnover: the elite survives unchanged, every other
/// slot is refilled by tournament selection, single-point crossover and
/// per-gene gaussian mutation, clamped to the box. Costs
/// population - elitism evaluations.
void generation(Population& pop, const GaParams& hp, const BoundsSet& bounds,
                const Objective& fn, Rng& rng);

}  // namespace rbopt::ga
