#include "rbopt/optim/pso.hpp"

#include <algorithm>

namespace rbopt::pso {

Swarm init(const PsoParams& hp, const std::vector<double>& x0,
           const BoundsSet& bounds, const Objective& fn, Rng& rng) {
  const std::size_t n = bounds.size();
  const std::size_t m = static_cast<std::size_t>(hp.swarm_size);

  Swarm s;
  s.x.assign(m, std::vector<double>(n, 0.0));
  s.v.assign(m, std::vector<double>(n, 0.0));
  s.x[0] = clamp(x0, bounds);
  for (std::size_t i = 1; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      s.x[i][j] = rng.uniform(bounds.lower[j], bounds.upper[j]);
    }
  }

  s.pbest = s.x;
  s.pbest_f.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    s.pbest_f[i] = fn(s.x[i]);
    if (s.pbest_f[i] < s.gbest_f) {
      s.gbest_f = s.pbest_f[i];
      s.gbest = s.x[i];
    }
  }
  if (s.gbest.empty()) s.gbest = s.x[0];
  return s;
}

void step(Swarm& s, const PsoParams& hp, const BoundsSet& bounds,
          const Objective& fn, Rng& rng) {
  const std::size_t n = bounds.size();
  for (std::size_t i = 0; i < s.x.size(); ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double r1 = rng.uniform01();
      const double r2 = rng.uniform01();
      double vel = hp.omega * s.v[i][j] +
                   hp.c1 * r1 * (s.pbest[i][j] - s.x[i][j]) +
                   hp.c2 * r2 * (s.gbest[j] - s.x[i][j]);
      const double cap = hp.v_max_frac * bounds.range(j);
      vel = std::min(cap, std::max(-cap, vel));
      s.v[i][j] = vel;
      s.x[i][j] = std::min(bounds.upper[j],
                           std::max(bounds.lower[j], s.x[i][j] + vel));
    }
    const double f = fn(s.x[i]);
    if (f < s.pbest_f[i]) {
      s.pbest_f[i] = f;
      s.pbest[i] = s.x[i];
    }
  }
  for (std::size_t i = 0; i < s.x.size(); ++i) {
    if (s.pbest_f[i] < s.gbest_f) {
      s.gbest_f = s.pbest_f[i];
      s.gbest = s.pbest[i];
    }
  }
}

}  // namespace rbopt::pso
