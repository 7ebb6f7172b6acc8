// rbopt — rocker-bogie suspension design optimization harness.
//
// Subcommands:
//   run <config.json>      execute the configured runs, write histories and
//                          summaries into the output directory
//   compare <config.json>  run every configured algorithm under all four
//                          init strategies and print the comparison matrix
//   testfuncs              validate every optimizer on the standard test
//                          functions against the documented thresholds
//   dump --xr .. --gear .. print mechanism state, forces, metrics and
//                          fitness for one design as JSON
//
// Exit codes: 0 success, 1 validation thresholds missed, 2 bad
// configuration or usage, 3 evaluation failure at runtime.

#include <cstdio>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "rbopt/errors.hpp"
#include "rbopt/experiment.hpp"
#include "rbopt/serialization.hpp"
#include "rbopt/testfunc_suite.hpp"

namespace {

struct GlobalOpts {
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out_dir;
  std::optional<int> workers;
  bool dump_state = false;
  bool dump_metrics = false;
};

void apply_overrides(rbopt::ExperimentConfig& cfg, const GlobalOpts& g) {
  if (g.seed) {
    for (auto& run : cfg.runs) run.seed = *g.seed;
  }
  if (g.out_dir) cfg.output_dir = *g.out_dir;
  if (g.workers) cfg.workers = *g.workers;
  cfg.dump_state = g.dump_state;
  cfg.dump_metrics = g.dump_metrics;
}

int cmd_run(const std::string& config_path, const GlobalOpts& g) {
  rbopt::ExperimentConfig cfg = rbopt::load_experiment_config(config_path);
  apply_overrides(cfg, g);

  const auto outputs = rbopt::run_experiment(cfg);
  rbopt::write_run_artifacts(cfg, outputs);

  for (const auto& row : rbopt::summarize(outputs)) {
    std::printf("%-4s %-10s rep %d  fitness %.4f  evals %llu  %.3fs\n",
                row.algorithm.c_str(), row.init_strategy.c_str(),
                row.repetition, row.best_fitness,
                static_cast<unsigned long long>(row.evals), row.wall_time);
  }
  std::printf("wrote %zu histories + summary.csv + summary.json to %s\n",
              outputs.size(), cfg.output_dir.c_str());
  return 0;
}

int cmd_compare(const std::string& config_path, const GlobalOpts& g) {
  rbopt::ExperimentConfig cfg = rbopt::load_experiment_config(config_path);
  apply_overrides(cfg, g);

  const auto outputs = rbopt::run_comparison(cfg);
  rbopt::write_run_artifacts(cfg, outputs);
  const auto matrix = rbopt::build_compare_matrix(outputs);
  rbopt::write_compare_csv(
      std::filesystem::path(cfg.output_dir) / "compare.csv", matrix);

  std::fputs(rbopt::format_compare_table(matrix).c_str(), stdout);
  std::printf("wrote %zu histories + compare.csv to %s\n", outputs.size(),
              cfg.output_dir.c_str());
  return 0;
}

int cmd_testfuncs() {
  const auto rows = rbopt::run_testfunc_suite(/*gated_only=*/false);
  std::fputs(rbopt::format_testfunc_report(rows).c_str(), stdout);
  if (!rbopt::all_gated_passed(rows)) {
    std::fputs("testfuncs: threshold failures listed above\n", stderr);
    return 1;
  }
  return 0;
}

int cmd_dump(const rbopt::DesignVector& requested,
             const std::optional<std::string>& config_path) {
  rbopt::ScenarioParams scenario;
  rbopt::FitnessWeights weights;
  rbopt::BoundsSet bounds = rbopt::default_bounds();
  if (config_path) {
    const auto cfg = rbopt::load_experiment_config(*config_path);
    scenario = cfg.scenario;
    weights = cfg.weights;
    bounds = cfg.bounds;
  }

  const auto flat = rbopt::from_design(requested);
  const auto clamped = rbopt::clamp(flat, bounds);
  if (clamped != flat) {
    std::fputs("warning: design outside bounds, clamped\n", stderr);
  }
  const rbopt::DesignVector d = rbopt::to_design(clamped);

  const rbopt::MechanismState m = rbopt::solve_geometry(d, scenario);
  const rbopt::ForceState f = rbopt::solve_forces(m, scenario);
  const rbopt::MetricsReport r = rbopt::evaluate_all(d, scenario);

  nlohmann::json out{{"design", d},
                     {"mechanism", m},
                     {"forces", f},
                     {"metrics", r},
                     {"fitness", rbopt::fitness(r, weights)}};
  std::printf("%s\n", out.dump(2).c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rocker-bogie suspension design optimization harness"};
  app.require_subcommand(1);
  // Let `rbopt run cfg.json --out-dir X` work as well as the flag-first
  // spelling: unmatched subcommand options fall through to the app.
  app.fallthrough(true);

  GlobalOpts g;
  std::uint64_t seed_val = 0;
  std::string out_dir_val;
  int workers_val = 0;
  auto* seed_opt = app.add_option("--seed", seed_val, "override run seeds");
  auto* dir_opt =
      app.add_option("--out-dir", out_dir_val, "override the output directory");
  auto* workers_opt =
      app.add_option("--workers", workers_val, "concurrent runs (0 = cores)");
  app.add_flag("--dump-state", g.dump_state,
               "also write mechanism-state JSON per run best");
  app.add_flag("--dump-metrics", g.dump_metrics,
               "also write metrics JSON per run best");

  std::string config_path;
  auto* run = app.add_subcommand("run", "execute the configured runs");
  run->add_option("config", config_path, "experiment config JSON")->required();

  auto* compare =
      app.add_subcommand("compare", "all init strategies per algorithm");
  compare->add_option("config", config_path, "experiment config JSON")
      ->required();

  auto* testfuncs =
      app.add_subcommand("testfuncs", "validate optimizers on test functions");

  rbopt::DesignVector d;
  std::optional<std::string> dump_config;
  std::string dump_config_val;
  auto* dump = app.add_subcommand("dump", "metrics for one design as JSON");
  dump->add_option("--xr", d.x_r, "rocker rear-arm reach [mm]")->required();
  dump->add_option("--yr", d.y_r, "rocker rear-arm drop [mm]")->required();
  dump->add_option("--zr", d.z_r, "chassis height [mm]")->required();
  dump->add_option("--gamma", d.gamma_rb, "rocker arm angle [deg]")->required();
  dump->add_option("--xb", d.x_b, "bogie half spacing [mm]")->required();
  dump->add_option("--yb1", d.y_b1, "front bogie drop [mm]")->required();
  dump->add_option("--yb2", d.y_b2, "rear bogie drop [mm]")->required();
  dump->add_option("--clearance", d.clearance_c, "ground clearance [mm]")
      ->required();
  dump->add_option("--lrb", d.l_rb, "lateral track [mm]")->required();
  dump->add_option("--gear", d.gear_j, "differential gear ratio")->required();
  auto* dump_cfg_opt =
      dump->add_option("--config", dump_config_val, "scenario/weights config");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (*seed_opt) g.seed = seed_val;
  if (*dir_opt) g.out_dir = out_dir_val;
  if (*workers_opt) g.workers = workers_val;
  if (*dump_cfg_opt) dump_config = dump_config_val;

  try {
    if (*run) return cmd_run(config_path, g);
    if (*compare) return cmd_compare(config_path, g);
    if (*testfuncs) return cmd_testfuncs();
    if (*dump) return cmd_dump(d, dump_config);
  } catch (const rbopt::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "evaluation error: %s\n", e.what());
    return 3;
  }
  return 2;
}
