// Throughput of the metric pipeline, the pieces the optimizer loop pays for
// on every candidate.

#include <benchmark/benchmark.h>

#include "rbopt/fitness.hpp"
#include "rbopt/metrics.hpp"
#include "rbopt/rng.hpp"

namespace {

using namespace rbopt;

void BM_SolveGeometry(benchmark::State& state) {
  const ScenarioParams sc;
  const DesignVector d = to_design({300, 200, 150, 135, 150,
                                    200, 200, 60, 275, 3});
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_geometry(d, sc));
  }
}
BENCHMARK(BM_SolveGeometry);

void BM_EvaluateAll(benchmark::State& state) {
  const ScenarioParams sc;
  const DesignVector d = to_design({300, 200, 150, 135, 150,
                                    200, 200, 60, 275, 3});
  for (auto _ : state) {
    benchmark::DoNotOptimize(evaluate_all(d, sc));
  }
}
BENCHMARK(BM_EvaluateAll);

void BM_Objective(benchmark::State& state) {
  const ObjectiveContext ctx;
  Rng rng(1);
  std::vector<std::vector<double>> points;
  for (int i = 0; i < 64; ++i) {
    points.push_back(initial_point(InitStrategy::Random, ctx.bounds, rng));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(objective(points[i++ & 63], ctx));
  }
}
BENCHMARK(BM_Objective);

void BM_Sinkage(benchmark::State& state) {
  const ScenarioParams sc;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sinkage(sc, 16.35, 15.0));
  }
}
BENCHMARK(BM_Sinkage);

}  // namespace
