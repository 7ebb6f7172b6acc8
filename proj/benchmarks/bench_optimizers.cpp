// Whole-run costs per algorithm on the design problem at the default
// protocol budget, and the raw generator throughput they are built on.

#include <benchmark/benchmark.h>

#include "rbopt/fitness.hpp"
#include "rbopt/optimizers.hpp"
#include "rbopt/rng.hpp"

namespace {

using namespace rbopt;

void BM_OptimizerRun(benchmark::State& state) {
  const auto alg = static_cast<Algorithm>(state.range(0));
  const ObjectiveContext ctx;
  const Objective fn = [&ctx](const std::vector<double>& x) {
    return objective(x, ctx);
  };

  OptimizerConfig cfg;
  cfg.algorithm = alg;
  cfg.budget_evals = 20000;
  cfg.generations = 100;
  cfg.seed = 42;

  for (auto _ : state) {
    benchmark::DoNotOptimize(minimize(cfg, fn, ctx.bounds));
  }
  state.SetLabel(to_string(alg));
}
BENCHMARK(BM_OptimizerRun)
    ->DenseRange(0, 5)
    ->Unit(benchmark::kMillisecond);

void BM_RngNormal(benchmark::State& state) {
  Rng rng(7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(rng.normal());
  }
}
BENCHMARK(BM_RngNormal);

void BM_RngGamma(benchmark::State& state) {
  Rng rng(7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(rng.gamma(0.1173));
  }
}
BENCHMARK(BM_RngGamma);

}  // namespace
