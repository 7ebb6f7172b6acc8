#include "rbopt/optim/de.hpp"

#include <algorithm>

namespace rbopt::de {

Population init(const DeParams& hp, const std::vector<double>& x0,
                const BoundsSet& bounds, const Objective& fn, Rng& rng) {
  const std::size_t n = bounds.size();
  const std::size_t m = static_cast<std::size_t>(hp.population);

  Population pop;
  pop.x.assign(m, std::vector<double>(n, 0.0));
  pop.x[0] = clamp(x0, bounds);
  for (std::size_t i = 1; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      pop.x[i][j] = rng.uniform(bounds.lower[j], bounds.upper[j]);
    }
  }
  pop.f.resize(m);
  for (std::size_t i = 0; i < m; ++i) pop.f[i] = fn(pop.x[i]);
  return pop;
}

void generation(Population& pop, const DeParams& hp, const BoundsSet& bounds,
                const Objective& fn, Rng& rng) {
  const std::size_t n = bounds.size();
  const std::size_t m = pop.x.size();

  std::vector<double> trial(n);
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t a, b, c;
    do {
      a = rng.index(m);
    } while (a == i);
    do {
      b = rng.index(m);
    } while (b == i || b == a);
    do {
      c = rng.index(m);
    } while (c == i || c == a || c == b);

    const std::size_t forced = rng.index(n);
    for (std::size_t j = 0; j < n; ++j) {
      if (j == forced || rng.uniform01() < hp.crossover_cr) {
        trial[j] = pop.x[a][j] + hp.weight_f * (pop.x[b][j] - pop.x[c][j]);
      } else {
        trial[j] = pop.x[i][j];
      }
      trial[j] = std::min(bounds.upper[j], std::max(bounds.lower[j], trial[j]));
    }

    const double ft = fn(trial);
    if (ft <= pop.f[i]) {
      pop.x[i] = trial;
      pop.f[i] = ft;
    }
  }
}

}  // namespace rbopt::de
