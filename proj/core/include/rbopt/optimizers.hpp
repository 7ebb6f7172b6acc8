#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "rbopt/design.hpp"

namespace rbopt {

/// Black-box minimization target. Implementations must tolerate +inf
/// return values (rejected points) and be safe for concurrent calls.
using Objective = std::function<double(const std::vector<double>&)>;

enum class Algorithm { PSO, GA, DE, SA, BH, DA };

const char* to_string(Algorithm a);
Algorithm algorithm_from_string(const std::string& name);

struct PsoParams {
  int swarm_size = 30;
  double omega = 0.7;       ///< inertia
  double c1 = 1.5;          ///< cognitive pull toward the particle best
  double c2 = 1.5;          ///< social pull toward the swarm best
  double v_max_frac = 0.2;  ///< velocity cap as a fraction of each range
};

struct GaParams {
  int population = 50;
  int tournament_k = 3;
  double crossover_rate = 0.9;       ///< single-point crossover probability
  double mutation_rate = 0.1;        ///< per-gene mutation probability
  double mutation_sigma_frac = 0.1;  ///< gaussian sigma as range fraction
  int elitism = 1;
};

struct DeParams {
  int population = 40;  ///< rand/1/bin needs at least 4 members
  double weight_f = 0.8;
  double crossover_cr = 0.9;
};

struct SaParams {
  double t0_scale = 10.0;  ///< T0 = t0_scale * |f(x0)|, or 1 if that is zero
  double cooling = 0.95;   ///< geometric factor applied once per generation
  double step_frac = 0.1;  ///< proposal sigma as range fraction at T = T0
  // The proposal sigma shrinks with sqrt(T/T0), the thermal width of the
  // Metropolis equilibrium. A fixed sigma stalls at O(sigma^2 * dim) on
  // smooth objectives, far short of the validation thresholds.
};

struct NelderMeadParams {
  double reflect = 1.0;
  double expand = 2.0;
  double contract = 0.5;
  double shrink = 0.5;
  double tol = 1e-8;  ///< stop when the simplex f-spread drops below this
  int max_iter = 500;
  double init_step_frac = 0.05;  ///< initial simplex edge as range fraction
};

struct BhParams {
  double displacement_frac = 0.1;  ///< uniform hop amplitude per range
  double temperature = 1.0;        ///< Metropolis temperature on minima
  NelderMeadParams local{};
};

struct DaParams {
  double q_visit = 2.62;       ///< visiting-distribution shape (1 < q < 3)
  double q_accept = -5.0;      ///< generalized acceptance shape
  double t0 = 5230.0;          ///< initial visiting temperature
  double restart_ratio = 2e-5; ///< reanneal when T/T0 falls below this
  bool polish = true;          ///< simplex refinement of new incumbents
  NelderMeadParams local{};
};

struct Hyperparams {
  PsoParams pso{};
  GaParams ga{};
  DeParams de{};
  SaParams sa{};
  BhParams bh{};
  DaParams da{};
};

struct OptimizerConfig {
  Algorithm algorithm = Algorithm::SA;
  std::uint64_t budget_evals = 20000;
  int generations = 100;
  std::uint64_t seed = 0;
  InitStrategy init_strategy = InitStrategy::Mean;
  Hyperparams hyperparams{};
};

struct RunResult {
  std::vector<double> best_x;
  double best_f = std::numeric_limits<double>::infinity();
  /// Best-so-far objective after each generation; exactly `generations`
  /// entries, nonincreasing, last entry equals best_f.
  std::vector<double> history;
  std::uint64_t evals_used = 0;
  double wall_time = 0.0;  ///< seconds; filled by the harness, not here
};

/// Runs the selected algorithm against the objective over the box. Never
/// evaluates more than cfg.budget_evals points, always returns the best
/// point seen, and is bit-reproducible for a given config.
/// Throws ConfigError for invalid hyperparameters before any evaluation.
RunResult minimize(const OptimizerConfig& cfg, const Objective& fn,
                   const BoundsSet& bounds);

}  // namespace rbopt
