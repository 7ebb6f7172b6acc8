#pragma once

#include <array>
#include <filesystem>
#include <string>
#include <vector>

#include "rbopt/fitness.hpp"
#include "rbopt/optimizers.hpp"

namespace rbopt {

/// A batch of optimizer runs over one scenario/weights/bounds triple.
struct ExperimentConfig {
  ScenarioParams scenario{};
  FitnessWeights weights{};
  BoundsSet bounds = default_bounds();
  std::vector<OptimizerConfig> runs;
  int repetitions = 1;
  std::string output_dir = "out";
  int workers = 0;           ///< concurrent runs; 0 means all logical cores
  bool dump_state = false;   ///< also write mechanism JSON per run best
  bool dump_metrics = false; ///< also write metrics JSON per run best
};

/// Parses and validates a config file; throws ConfigError with a
/// human-readable diagnostic on malformed input.
ExperimentConfig load_experiment_config(const std::string& path);
ExperimentConfig experiment_config_from_text(const std::string& json_text);

struct RunOutput {
  Algorithm algorithm = Algorithm::SA;
  InitStrategy init_strategy = InitStrategy::Mean;
  int repetition = 0;
  RunResult result;
};

/// One summary line per run; best_fitness is on the positive fitness scale
/// (the exact negation of the best objective value).
struct SummaryRow {
  std::string algorithm;
  std::string init_strategy;
  double best_fitness = 0.0;
  double wall_time = 0.0;
  std::uint64_t evals = 0;
  int repetition = 0;
};

/// Executes runs x repetitions on a bounded worker pool. Repetition r of a
/// run entry uses seed entry.seed + r. Output order and content do not
/// depend on the worker count; wall_time is measured around minimize()
/// only.
std::vector<RunOutput> run_experiment(const ExperimentConfig& cfg);

/// Like run_experiment but every run entry is expanded over all four init
/// strategies (Mean, Random, UpperBound, LowerBound).
std::vector<RunOutput> run_comparison(const ExperimentConfig& cfg);

std::vector<SummaryRow> summarize(const std::vector<RunOutput>& outputs);

/// history_<algorithm>_<strategy>_<repetition>.csv
std::string history_filename(const RunOutput& out);

/// Writes per-run history CSVs, summary.csv and summary.json (plus optional
/// per-run state/metrics dumps) into cfg.output_dir, creating it if needed.
void write_run_artifacts(const ExperimentConfig& cfg,
                         const std::vector<RunOutput>& outputs);

/// Aggregated comparison matrix: per algorithm the mean wall time and the
/// mean best fitness per init strategy, plus the relative spread
/// (max - min) / |mean| across the four strategy means.
struct CompareRow {
  std::string algorithm;
  double mean_time = 0.0;
  std::array<double, 4> fitness{};  ///< Mean, Random, UpperBound, LowerBound
  double spread = 0.0;
};

std::vector<CompareRow> build_compare_matrix(
    const std::vector<RunOutput>& outputs);

std::string format_compare_table(const std::vector<CompareRow>& matrix);

void write_compare_csv(const std::filesystem::path& path,
                       const std::vector<CompareRow>& matrix);

/// Shortest exact decimal form (17 significant digits) used in every CSV.
std::string format_double(double v);

}  // namespace rbopt
