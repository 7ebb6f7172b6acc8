#include "rbopt/optim/ga.hpp"

#include <algorithm>
#include <numeric>

namespace rbopt::ga {

namespace {

std::size_t tournament(const Population& pop, int k, Rng& rng) {
  std::size_t winner = rng.index(pop.x.size());
  for (int round = 1; round < k; ++round) {
    const std::size_t contender = rng.index(pop.x.size());
    if (pop.f[contender] < pop.f[winner]) winner = contender;
  }
  return winner;
}

}  // namespace

Population init(const GaParams& hp, const std::vector<double>& x0,
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

void generation(Population& pop, const GaParams& hp, const BoundsSet& bounds,
                const Objective& fn, Rng& rng) {
  const std::size_t n = bounds.size();
  const std::size_t m = pop.x.size();
  const std::size_t elites = static_cast<std::size_t>(hp.elitism);

  // Keep the elitism best members as-is (ties resolved by index).
  std::vector<std::size_t> rank(m);
  std::iota(rank.begin(), rank.end(), std::size_t{0});
  std::stable_sort(rank.begin(), rank.end(), [&](std::size_t a, std::size_t b) {
    return pop.f[a] < pop.f[b];
  });

  Population next;
  next.x.reserve(m);
  next.f.reserve(m);
  for (std::size_t e = 0; e < elites && e < m; ++e) {
    next.x.push_back(pop.x[rank[e]]);
    next.f.push_back(pop.f[rank[e]]);
  }

  while (next.x.size() < m) {
    const std::size_t p1 = tournament(pop, hp.tournament_k, rng);
    const std::size_t p2 = tournament(pop, hp.tournament_k, rng);

    std::vector<double> child = pop.x[p1];
    if (rng.uniform01() < hp.crossover_rate) {
      const std::size_t cut = 1 + rng.index(n - 1);
      for (std::size_t j = cut; j < n; ++j) child[j] = pop.x[p2][j];
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (rng.uniform01() < hp.mutation_rate) {
        child[j] += rng.normal(0.0, hp.mutation_sigma_frac * bounds.range(j));
      }
      child[j] = std::min(bounds.upper[j], std::max(bounds.lower[j], child[j]));
    }

    next.f.push_back(fn(child));
    next.x.push_back(std::move(child));
  }
  pop = std::move(next);
}

}  // namespace rbopt::ga
