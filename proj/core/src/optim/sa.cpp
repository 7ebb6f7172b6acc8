#include "rbopt/optim/sa.hpp"

#include <algorithm>
#include <cmath>

namespace rbopt::sa {

bool accept(double delta, double temperature, Rng& rng) {
  if (delta <= 0.0) return true;
  if (!(temperature > 0.0)) return false;
  return rng.uniform01() < std::exp(-delta / temperature);
}

void step(State& s, const SaParams& hp, const BoundsSet& bounds,
          const Objective& fn, Rng& rng) {
  const std::size_t n = bounds.size();
  // Proposals track the thermal width sqrt(T): near a quadratic basin the
  // Metropolis equilibrium spreads coordinates by O(sqrt(T)), so this keeps
  // the acceptance rate in a useful band all the way down the schedule.
  const double scale =
      s.t0 > 0.0 ? std::sqrt(std::max(0.0, s.t) / s.t0) : 1.0;

  std::vector<double> y(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double sigma = hp.step_frac * bounds.range(j) * scale;
    y[j] = std::min(bounds.upper[j],
                    std::max(bounds.lower[j], s.x[j] + rng.normal(0.0, sigma)));
  }

  const double fy = fn(y);
  if (accept(fy - s.fx, s.t, rng)) {
    s.x = std::move(y);
    s.fx = fy;
  }
}

}  // namespace rbopt::sa
