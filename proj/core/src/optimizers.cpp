#include "rbopt/optimizers.hpp"

#include <algorithm>
#include <cmath>

#include "rbopt/errors.hpp"
#include "rbopt/nelder_mead.hpp"
#include "rbopt/optim/bh.hpp"
#include "rbopt/optim/da.hpp"
#include "rbopt/optim/de.hpp"
#include "rbopt/optim/ga.hpp"
#include "rbopt/optim/pso.hpp"
#include "rbopt/optim/sa.hpp"
#include "rbopt/rng.hpp"

namespace rbopt {

namespace {

// Counts every objective call, enforces the budget and remembers the best
// point ever evaluated, so every algorithm reports the true incumbent.
class CountingObjective {
 public:
  CountingObjective(const Objective& fn, std::uint64_t budget)
      : fn_(fn), budget_(budget) {}

  double operator()(const std::vector<double>& x) {
    ++used_;
    const double f = fn_(x);
    if (best_x_.empty() || f < best_f_) {
      best_f_ = f;
      best_x_ = x;
    }
    return f;
  }

  std::uint64_t used() const { return used_; }
  std::uint64_t remaining() const { return budget_ > used_ ? budget_ - used_ : 0; }
  double best_f() const { return best_f_; }
  const std::vector<double>& best_x() const { return best_x_; }

 private:
  const Objective& fn_;
  std::uint64_t budget_;
  std::uint64_t used_ = 0;
  double best_f_ = std::numeric_limits<double>::infinity();
  std::vector<double> best_x_;
};

// Work for generation g when `total` units are spread evenly over G blocks.
std::uint64_t block_share(std::uint64_t total, int g, int generations) {
  const auto gg = static_cast<std::uint64_t>(g);
  const auto n = static_cast<std::uint64_t>(generations);
  return total * (gg + 1) / n - total * gg / n;
}

void require(bool ok, const char* what) {
  if (!ok) throw ConfigError(what);
}

void validate(const OptimizerConfig& cfg, const BoundsSet& bounds) {
  require(bounds.size() > 0, "config: empty bounds");
  require(cfg.budget_evals >= 1, "config: budget_evals must be positive");
  require(cfg.generations >= 1, "config: generations must be positive");

  const Hyperparams& hp = cfg.hyperparams;
  switch (cfg.algorithm) {
    case Algorithm::PSO:
      require(hp.pso.swarm_size >= 2, "pso: swarm_size must be >= 2");
      require(hp.pso.v_max_frac > 0.0, "pso: v_max_frac must be positive");
      require(cfg.budget_evals >= static_cast<std::uint64_t>(hp.pso.swarm_size),
              "pso: budget below swarm size");
      break;
    case Algorithm::GA:
      require(hp.ga.population >= 2, "ga: population must be >= 2");
      require(hp.ga.tournament_k >= 1, "ga: tournament_k must be >= 1");
      require(hp.ga.crossover_rate >= 0.0 && hp.ga.crossover_rate <= 1.0,
              "ga: crossover_rate outside [0,1]");
      require(hp.ga.mutation_rate >= 0.0 && hp.ga.mutation_rate <= 1.0,
              "ga: mutation_rate outside [0,1]");
      require(hp.ga.elitism >= 0 && hp.ga.elitism < hp.ga.population,
              "ga: elitism outside [0, population)");
      require(cfg.budget_evals >= static_cast<std::uint64_t>(hp.ga.population),
              "ga: budget below population");
      break;
    case Algorithm::DE:
      require(hp.de.population >= 4, "de: population must be >= 4");
      require(hp.de.crossover_cr >= 0.0 && hp.de.crossover_cr <= 1.0,
              "de: crossover_cr outside [0,1]");
      require(cfg.budget_evals >= static_cast<std::uint64_t>(hp.de.population),
              "de: budget below population");
      break;
    case Algorithm::SA:
      require(hp.sa.cooling > 0.0 && hp.sa.cooling <= 1.0,
              "sa: cooling outside (0,1]");
      require(hp.sa.step_frac > 0.0, "sa: step_frac must be positive");
      require(hp.sa.t0_scale > 0.0, "sa: t0_scale must be positive");
      break;
    case Algorithm::BH:
      require(hp.bh.displacement_frac >= 0.0,
              "bh: displacement_frac must be nonnegative");
      require(hp.bh.temperature >= 0.0, "bh: temperature must be nonnegative");
      require(hp.bh.local.max_iter >= 1, "bh: local max_iter must be >= 1");
      break;
    case Algorithm::DA:
      require(hp.da.q_visit > 1.0 && hp.da.q_visit < 3.0,
              "da: q_visit outside (1,3)");
      require(hp.da.q_accept < 1.0, "da: q_accept must be below 1");
      require(hp.da.t0 > 0.0, "da: t0 must be positive");
      require(hp.da.restart_ratio > 0.0, "da: restart_ratio must be positive");
      break;
  }
}

RunResult finish(const CountingObjective& counted,
                 std::vector<double> history) {
  RunResult r;
  r.best_x = counted.best_x();
  r.best_f = counted.best_f();
  r.history = std::move(history);
  r.evals_used = counted.used();
  return r;
}

RunResult run_pso(const OptimizerConfig& cfg, CountingObjective& fn,
                  const BoundsSet& bounds, Rng& rng,
                  const std::vector<double>& x0) {
  const PsoParams& hp = cfg.hyperparams.pso;
  auto swarm = pso::init(hp, x0, bounds, std::ref(fn), rng);

  std::vector<double> history;
  history.reserve(cfg.generations);
  for (int g = 0; g < cfg.generations; ++g) {
    if (fn.remaining() >= static_cast<std::uint64_t>(hp.swarm_size)) {
      pso::step(swarm, hp, bounds, std::ref(fn), rng);
    }
    history.push_back(fn.best_f());
  }
  return finish(fn, std::move(history));
}

RunResult run_ga(const OptimizerConfig& cfg, CountingObjective& fn,
                 const BoundsSet& bounds, Rng& rng,
                 const std::vector<double>& x0) {
  const GaParams& hp = cfg.hyperparams.ga;
  auto pop = ga::init(hp, x0, bounds, std::ref(fn), rng);
  const auto per_gen = static_cast<std::uint64_t>(hp.population - hp.elitism);

  std::vector<double> history;
  history.reserve(cfg.generations);
  for (int g = 0; g < cfg.generations; ++g) {
    if (fn.remaining() >= per_gen) {
      ga::generation(pop, hp, bounds, std::ref(fn), rng);
    }
    history.push_back(fn.best_f());
  }
  return finish(fn, std::move(history));
}

RunResult run_de(const OptimizerConfig& cfg, CountingObjective& fn,
                 const BoundsSet& bounds, Rng& rng,
                 const std::vector<double>& x0) {
  const DeParams& hp = cfg.hyperparams.de;
  auto pop = de::init(hp, x0, bounds, std::ref(fn), rng);

  std::vector<double> history;
  history.reserve(cfg.generations);
  for (int g = 0; g < cfg.generations; ++g) {
    if (fn.remaining() >= static_cast<std::uint64_t>(hp.population)) {
      de::generation(pop, hp, bounds, std::ref(fn), rng);
    }
    history.push_back(fn.best_f());
  }
  return finish(fn, std::move(history));
}

RunResult run_sa(const OptimizerConfig& cfg, CountingObjective& fn,
                 const BoundsSet& bounds, Rng& rng,
                 const std::vector<double>& x0) {
  const SaParams& hp = cfg.hyperparams.sa;

  sa::State st;
  st.x = clamp(x0, bounds);
  st.fx = fn(st.x);
  st.t0 = std::isfinite(st.fx) && st.fx != 0.0
              ? hp.t0_scale * std::abs(st.fx)
              : 1.0;
  st.t = st.t0;

  const std::uint64_t iters_total = cfg.budget_evals - 1;
  std::vector<double> history;
  history.reserve(cfg.generations);
  for (int g = 0; g < cfg.generations; ++g) {
    const std::uint64_t block = block_share(iters_total, g, cfg.generations);
    for (std::uint64_t i = 0; i < block && fn.remaining() >= 1; ++i) {
      sa::step(st, hp, bounds, std::ref(fn), rng);
    }
    st.t *= hp.cooling;
    history.push_back(fn.best_f());
  }
  return finish(fn, std::move(history));
}

RunResult run_bh(const OptimizerConfig& cfg, CountingObjective& fn,
                 const BoundsSet& bounds, Rng& rng,
                 const std::vector<double>& x0) {
  const BhParams& hp = cfg.hyperparams.bh;
  const std::size_t n = bounds.size();

  bh::State st;
  st.x = clamp(x0, bounds);
  const auto first = nelder_mead(st.x, std::ref(fn), bounds, hp.local,
                                 fn.remaining());
  st.x = first.x;
  st.fx = first.f;

  std::vector<double> history;
  history.reserve(cfg.generations);
  for (int g = 0; g < cfg.generations; ++g) {
    if (fn.remaining() >= n + 2) {
      bh::iterate(st, hp, bounds, std::ref(fn), fn.remaining(), rng);
    }
    history.push_back(fn.best_f());
  }
  return finish(fn, std::move(history));
}

RunResult run_da(const OptimizerConfig& cfg, CountingObjective& fn,
                 const BoundsSet& bounds, Rng& rng,
                 const std::vector<double>& x0) {
  const DaParams& hp = cfg.hyperparams.da;
  const std::size_t n = bounds.size();

  da::State st;
  st.x = clamp(x0, bounds);
  st.fx = fn(st.x);

  const std::uint64_t steps_total = (cfg.budget_evals - 1) / (2 * n);
  double polished_at = fn.best_f();

  std::vector<double> history;
  history.reserve(cfg.generations);
  for (int g = 0; g < cfg.generations; ++g) {
    const std::uint64_t block = block_share(steps_total, g, cfg.generations);
    for (std::uint64_t i = 0; i < block; ++i) {
      if (da::visiting_temperature(hp.t0, hp.q_visit, st.t) / hp.t0 <
          hp.restart_ratio) {
        // Reanneal: restart the schedule from a fresh uniform point; the
        // incumbent stays recorded in the counting wrapper.
        if (fn.remaining() < 1) break;
        st.t = 1;
        for (std::size_t j = 0; j < n; ++j) {
          st.x[j] = rng.uniform(bounds.lower[j], bounds.upper[j]);
        }
        st.fx = fn(st.x);
      }
      if (fn.remaining() < 2 * n) break;
      da::step(st, hp, bounds, std::ref(fn), rng);
    }
    if (hp.polish && fn.best_f() < polished_at && fn.remaining() > n + 1) {
      const auto local = nelder_mead(fn.best_x(), std::ref(fn), bounds,
                                     hp.local, fn.remaining());
      polished_at = fn.best_f();
      if (local.f < st.fx) {
        st.x = local.x;
        st.fx = local.f;
      }
    }
    history.push_back(fn.best_f());
  }
  return finish(fn, std::move(history));
}

}  // namespace

const char* to_string(Algorithm a) {
  switch (a) {
    case Algorithm::PSO: return "PSO";
    case Algorithm::GA: return "GA";
    case Algorithm::DE: return "DE";
    case Algorithm::SA: return "SA";
    case Algorithm::BH: return "BH";
    case Algorithm::DA: return "DA";
  }
  return "?";
}

Algorithm algorithm_from_string(const std::string& name) {
  if (name == "PSO") return Algorithm::PSO;
  if (name == "GA") return Algorithm::GA;
  if (name == "DE") return Algorithm::DE;
  if (name == "SA") return Algorithm::SA;
  if (name == "BH") return Algorithm::BH;
  if (name == "DA") return Algorithm::DA;
  throw ConfigError("unknown algorithm: " + name);
}

RunResult minimize(const OptimizerConfig& cfg, const Objective& fn,
                   const BoundsSet& bounds) {
  validate(cfg, bounds);

  Rng rng(cfg.seed);
  CountingObjective counted(fn, cfg.budget_evals);
  const std::vector<double> x0 =
      initial_point(cfg.init_strategy, bounds, rng);

  switch (cfg.algorithm) {
    case Algorithm::PSO: return run_pso(cfg, counted, bounds, rng, x0);
    case Algorithm::GA: return run_ga(cfg, counted, bounds, rng, x0);
    case Algorithm::DE: return run_de(cfg, counted, bounds, rng, x0);
    case Algorithm::SA: return run_sa(cfg, counted, bounds, rng, x0);
    case Algorithm::BH: return run_bh(cfg, counted, bounds, rng, x0);
    case Algorithm::DA: return run_da(cfg, counted, bounds, rng, x0);
  }
  throw ConfigError("unknown algorithm enum value");
}

}  // namespace rbopt
