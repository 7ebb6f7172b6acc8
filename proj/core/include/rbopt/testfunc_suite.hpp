#pragma once

#include <string>
#include <vector>

#include "rbopt/optimizers.hpp"

namespace rbopt {

/// Result of one (function x algorithm) validation row, run over the fixed
/// seeds 1..10. Gated rows carry a pass threshold and a minimum number of
/// seeds that must reach it; ungated rows are informational.
struct TestFuncRun {
  std::string function;
  std::size_t dim = 0;
  Algorithm algorithm = Algorithm::SA;
  std::uint64_t budget = 0;
  bool gated = false;
  double threshold = 0.0;
  int required_passes = 0;
  std::vector<double> per_seed_best;
  int passes = 0;
  bool passed = true;
  double max_run_seconds = 0.0;
};

/// Runs the validation matrix:
///   sphere 10-D, [-5,5], 50k evals: all six algorithms
///     (gated: <= 1e-4 on >= 9/10 seeds, GA <= 1e-2),
///   rastrigin 5-D, [-5.12,5.12], 100k evals: DE and DA
///     (gated: <= 1e-6 on >= 7/10 seeds),
///   rosenbrock 10-D and ackley 10-D, 50k evals: all six (informational).
/// gated_only skips the informational rows.
std::vector<TestFuncRun> run_testfunc_suite(bool gated_only);

std::string format_testfunc_report(const std::vector<TestFuncRun>& rows);

bool all_gated_passed(const std::vector<TestFuncRun>& rows);

}  // namespace rbopt
