#pragma once

#include <atomic>
#include <cstdint>
#include <vector>

#include "rbopt/metrics.hpp"

namespace rbopt {

/// Weighted aggregation of a metrics report into the scalar fitness
///
///   f = w1 s mu* + w2 eps_mu + w3 (s-1) P + w4 c_lat + w5 c_long
///       + w6 eps1 + w7 c_traff + w8 z_rw + w9 theta_rover.
///
/// Maximized by convention; throws EvaluationError when the result is not
/// finite (e.g. unloaded wheels propagating an infinite mu*).
double fitness(const MetricsReport& r, const FitnessWeights& w);

/// Everything an optimizer needs to score a candidate, plus an exact count
/// of objective calls for fair cross-algorithm budget accounting. The
/// counter is atomic; everything else is immutable for the run.
struct ObjectiveContext {
  FitnessWeights weights{};
  ScenarioParams scenario{};
  BoundsSet bounds = default_bounds();
  mutable std::atomic<std::uint64_t> eval_counter{0};

  ObjectiveContext() = default;
  ObjectiveContext(FitnessWeights w, ScenarioParams s, BoundsSet b)
      : weights(w), scenario(std::move(s)), bounds(std::move(b)) {}
};

/// Minimization objective: -fitness of the clamped candidate. Evaluation
/// failures (non-finite metrics, unstable force balance) come back as +inf
/// so stochastic searches simply reject the point. Increments
/// ctx.eval_counter on every call; safe to call concurrently.
double objective(const std::vector<double>& x, const ObjectiveContext& ctx);

}  // namespace rbopt
