#include "rbopt/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>
#include <utility>

#include <json.hpp>

#include "rbopt/errors.hpp"
#include "rbopt/serialization.hpp"

namespace rbopt {

namespace {

using nlohmann::json;

constexpr std::array<InitStrategy, 4> kStrategyOrder = {
    InitStrategy::Mean, InitStrategy::Random, InitStrategy::UpperBound,
    InitStrategy::LowerBound};

void parse_hyperparams(const json& j, Hyperparams& hp) {
  if (j.contains("pso")) {
    const json& p = j.at("pso");
    hp.pso.swarm_size = p.value("swarm_size", hp.pso.swarm_size);
    hp.pso.omega = p.value("omega", hp.pso.omega);
    hp.pso.c1 = p.value("c1", hp.pso.c1);
    hp.pso.c2 = p.value("c2", hp.pso.c2);
    hp.pso.v_max_frac = p.value("v_max_frac", hp.pso.v_max_frac);
  }
  if (j.contains("ga")) {
    const json& p = j.at("ga");
    hp.ga.population = p.value("population", hp.ga.population);
    hp.ga.tournament_k = p.value("tournament_k", hp.ga.tournament_k);
    hp.ga.crossover_rate = p.value("crossover_rate", hp.ga.crossover_rate);
    hp.ga.mutation_rate = p.value("mutation_rate", hp.ga.mutation_rate);
    hp.ga.mutation_sigma_frac =
        p.value("mutation_sigma_frac", hp.ga.mutation_sigma_frac);
    hp.ga.elitism = p.value("elitism", hp.ga.elitism);
  }
  if (j.contains("de")) {
    const json& p = j.at("de");
    hp.de.population = p.value("population", hp.de.population);
    hp.de.weight_f = p.value("weight_f", hp.de.weight_f);
    hp.de.crossover_cr = p.value("crossover_cr", hp.de.crossover_cr);
  }
  if (j.contains("sa")) {
    const json& p = j.at("sa");
    hp.sa.t0_scale = p.value("t0_scale", hp.sa.t0_scale);
    hp.sa.cooling = p.value("cooling", hp.sa.cooling);
    hp.sa.step_frac = p.value("step_frac", hp.sa.step_frac);
  }
  if (j.contains("bh")) {
    const json& p = j.at("bh");
    hp.bh.displacement_frac =
        p.value("displacement_frac", hp.bh.displacement_frac);
    hp.bh.temperature = p.value("temperature", hp.bh.temperature);
    hp.bh.local.tol = p.value("local_tol", hp.bh.local.tol);
    hp.bh.local.max_iter = p.value("local_max_iter", hp.bh.local.max_iter);
  }
  if (j.contains("da")) {
    const json& p = j.at("da");
    hp.da.q_visit = p.value("q_visit", hp.da.q_visit);
    hp.da.q_accept = p.value("q_accept", hp.da.q_accept);
    hp.da.t0 = p.value("t0", hp.da.t0);
    hp.da.restart_ratio = p.value("restart_ratio", hp.da.restart_ratio);
    hp.da.polish = p.value("polish", hp.da.polish);
  }
}

OptimizerConfig parse_run(const json& j) {
  OptimizerConfig cfg;
  if (!j.contains("algorithm")) {
    throw ConfigError("run entry: missing \"algorithm\"");
  }
  cfg.algorithm = algorithm_from_string(j.at("algorithm").get<std::string>());
  cfg.budget_evals = j.value("budget_evals", cfg.budget_evals);
  cfg.generations = j.value("generations", cfg.generations);
  cfg.seed = j.value("seed", cfg.seed);
  if (j.contains("init_strategy")) {
    cfg.init_strategy =
        init_strategy_from_string(j.at("init_strategy").get<std::string>());
  }
  if (j.contains("hyperparams")) {
    parse_hyperparams(j.at("hyperparams"), cfg.hyperparams);
  }
  return cfg;
}

ExperimentConfig parse_config(const json& j) {
  ExperimentConfig cfg;
  try {
    if (j.contains("scenario")) j.at("scenario").get_to(cfg.scenario);
    if (j.contains("weights")) j.at("weights").get_to(cfg.weights);
    if (j.contains("bounds")) j.at("bounds").get_to(cfg.bounds);
    if (!j.contains("runs") || !j.at("runs").is_array() ||
        j.at("runs").empty()) {
      throw ConfigError("config: \"runs\" must be a nonempty array");
    }
    for (const json& r : j.at("runs")) cfg.runs.push_back(parse_run(r));
    cfg.repetitions = j.value("repetitions", 1);
    cfg.output_dir = j.value("output_dir", cfg.output_dir);
    cfg.workers = j.value("workers", 0);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  if (cfg.repetitions < 1) {
    throw ConfigError("config: repetitions must be >= 1");
  }
  return cfg;
}

struct Job {
  Algorithm algorithm;
  InitStrategy strategy;
  int repetition;
  OptimizerConfig cfg;
};

std::vector<RunOutput> execute(const ExperimentConfig& cfg,
                               const std::vector<Job>& jobs) {
  std::vector<RunOutput> outputs(jobs.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= jobs.size() || failed.load()) return;
      const Job& job = jobs[i];
      try {
        ObjectiveContext ctx(cfg.weights, cfg.scenario, cfg.bounds);
        const Objective fn = [&ctx](const std::vector<double>& x) {
          return objective(x, ctx);
        };
        const auto t0 = std::chrono::steady_clock::now();
        RunResult res = minimize(job.cfg, fn, cfg.bounds);
        const auto t1 = std::chrono::steady_clock::now();
        res.wall_time = std::chrono::duration<double>(t1 - t0).count();
        outputs[i] = RunOutput{job.algorithm, job.strategy, job.repetition,
                               std::move(res)};
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        failed.store(true);
        return;
      }
    }
  };

  unsigned pool = cfg.workers > 0
                      ? static_cast<unsigned>(cfg.workers)
                      : std::max(1u, std::thread::hardware_concurrency());
  pool = std::min<unsigned>(pool, static_cast<unsigned>(jobs.size()));

  std::vector<std::thread> threads;
  threads.reserve(pool);
  for (unsigned t = 0; t < pool; ++t) threads.emplace_back(worker);
  for (auto& t : threads) t.join();

  if (error) std::rethrow_exception(error);
  return outputs;
}

std::vector<Job> expand_jobs(const ExperimentConfig& cfg,
                             bool all_strategies) {
  std::vector<Job> jobs;
  for (const OptimizerConfig& run : cfg.runs) {
    const auto strategies =
        all_strategies ? std::vector<InitStrategy>(kStrategyOrder.begin(),
                                                   kStrategyOrder.end())
                       : std::vector<InitStrategy>{run.init_strategy};
    for (InitStrategy strategy : strategies) {
      for (int rep = 0; rep < cfg.repetitions; ++rep) {
        Job job{run.algorithm, strategy, rep, run};
        job.cfg.init_strategy = strategy;
        job.cfg.seed = run.seed + static_cast<std::uint64_t>(rep);
        jobs.push_back(job);
      }
    }
  }
  return jobs;
}

void write_text_file(const std::filesystem::path& path,
                     const std::string& content) {
  std::ofstream out(path, std::ios::binary);  // binary keeps LF endings
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v,
                                 std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

ExperimentConfig load_experiment_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  return parse_config(j);
}

ExperimentConfig experiment_config_from_text(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  return parse_config(j);
}

std::vector<RunOutput> run_experiment(const ExperimentConfig& cfg) {
  return execute(cfg, expand_jobs(cfg, /*all_strategies=*/false));
}

std::vector<RunOutput> run_comparison(const ExperimentConfig& cfg) {
  return execute(cfg, expand_jobs(cfg, /*all_strategies=*/true));
}

std::vector<SummaryRow> summarize(const std::vector<RunOutput>& outputs) {
  std::vector<SummaryRow> rows;
  rows.reserve(outputs.size());
  for (const RunOutput& out : outputs) {
    SummaryRow row;
    row.algorithm = to_string(out.algorithm);
    row.init_strategy = to_string(out.init_strategy);
    row.best_fitness = -out.result.best_f;
    row.wall_time = out.result.wall_time;
    row.evals = out.result.evals_used;
    row.repetition = out.repetition;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string history_filename(const RunOutput& out) {
  std::ostringstream name;
  name << "history_" << to_string(out.algorithm) << "_"
       << to_string(out.init_strategy) << "_" << out.repetition << ".csv";
  return name.str();
}

void write_run_artifacts(const ExperimentConfig& cfg,
                         const std::vector<RunOutput>& outputs) {
  const std::filesystem::path dir(cfg.output_dir);
  std::filesystem::create_directories(dir);

  for (const RunOutput& out : outputs) {
    std::string csv = "generation,best_objective,best_fitness\n";
    for (std::size_t g = 0; g < out.result.history.size(); ++g) {
      const double obj = out.result.history[g];
      csv += std::to_string(g + 1);
      csv += ',';
      csv += format_double(obj);
      csv += ',';
      csv += format_double(-obj);
      csv += '\n';
    }
    write_text_file(dir / history_filename(out), csv);
  }

  const std::vector<SummaryRow> rows = summarize(outputs);
  std::string csv = "algorithm,init_strategy,best_fitness,wall_time,evals,repetition\n";
  for (const SummaryRow& row : rows) {
    csv += row.algorithm;
    csv += ',';
    csv += row.init_strategy;
    csv += ',';
    csv += format_double(row.best_fitness);
    csv += ',';
    csv += format_double(row.wall_time);
    csv += ',';
    csv += std::to_string(row.evals);
    csv += ',';
    csv += std::to_string(row.repetition);
    csv += '\n';
  }
  write_text_file(dir / "summary.csv", csv);

  json jrows = json::array();
  for (const SummaryRow& row : rows) {
    jrows.push_back(json{{"algorithm", row.algorithm},
                         {"init_strategy", row.init_strategy},
                         {"best_fitness", row.best_fitness},
                         {"wall_time", row.wall_time},
                         {"evals", row.evals},
                         {"repetition", row.repetition}});
  }
  write_text_file(dir / "summary.json", jrows.dump(2) + "\n");

  if (cfg.dump_state || cfg.dump_metrics) {
    for (const RunOutput& out : outputs) {
      if (out.result.best_x.empty()) continue;
      const DesignVector d =
          to_design(clamp(out.result.best_x, cfg.bounds));
      std::ostringstream stem;
      stem << to_string(out.algorithm) << "_" << to_string(out.init_strategy)
           << "_" << out.repetition;
      if (cfg.dump_state) {
        const json j = solve_geometry(d, cfg.scenario);
        write_text_file(dir / ("state_" + stem.str() + ".json"),
                        j.dump(2) + "\n");
      }
      if (cfg.dump_metrics) {
        const json j = evaluate_all(d, cfg.scenario);
        write_text_file(dir / ("metrics_" + stem.str() + ".json"),
                        j.dump(2) + "\n");
      }
    }
  }
}

std::vector<CompareRow> build_compare_matrix(
    const std::vector<RunOutput>& outputs) {
  std::vector<CompareRow> matrix;
  auto find_row = [&](const std::string& alg) -> CompareRow& {
    for (CompareRow& row : matrix) {
      if (row.algorithm == alg) return row;
    }
    matrix.push_back(CompareRow{alg, 0.0, {0.0, 0.0, 0.0, 0.0}, 0.0});
    return matrix.back();
  };

  struct Acc {
    std::array<double, 4> fitness_sum{};
    std::array<int, 4> fitness_n{};
    double time_sum = 0.0;
    int time_n = 0;
  };
  std::vector<std::pair<std::string, Acc>> accs;
  auto find_acc = [&](const std::string& alg) -> Acc& {
    for (auto& [name, acc] : accs) {
      if (name == alg) return acc;
    }
    accs.emplace_back(alg, Acc{});
    return accs.back().second;
  };

  for (const RunOutput& out : outputs) {
    Acc& acc = find_acc(to_string(out.algorithm));
    const auto it = std::find(kStrategyOrder.begin(), kStrategyOrder.end(),
                              out.init_strategy);
    const auto idx =
        static_cast<std::size_t>(std::distance(kStrategyOrder.begin(), it));
    acc.fitness_sum[idx] += -out.result.best_f;
    acc.fitness_n[idx] += 1;
    acc.time_sum += out.result.wall_time;
    acc.time_n += 1;
  }

  for (const auto& [alg, acc] : accs) {
    CompareRow& row = find_row(alg);
    row.mean_time = acc.time_n > 0 ? acc.time_sum / acc.time_n : 0.0;
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    double sum = 0.0;
    int n = 0;
    for (std::size_t k = 0; k < 4; ++k) {
      row.fitness[k] =
          acc.fitness_n[k] > 0 ? acc.fitness_sum[k] / acc.fitness_n[k]
                               : std::numeric_limits<double>::quiet_NaN();
      if (acc.fitness_n[k] > 0) {
        lo = std::min(lo, row.fitness[k]);
        hi = std::max(hi, row.fitness[k]);
        sum += row.fitness[k];
        ++n;
      }
    }
    const double mean = n > 0 ? sum / n : 0.0;
    row.spread = (n > 0 && mean != 0.0) ? (hi - lo) / std::abs(mean) : 0.0;
  }
  return matrix;
}

std::string format_compare_table(const std::vector<CompareRow>& matrix) {
  std::ostringstream out;
  char line[160];
  std::snprintf(line, sizeof(line), "%-6s %12s %14s %14s %14s %14s %10s\n",
                "alg", "time[s]", "f(Mean)", "f(Random)", "f(UpperBound)",
                "f(LowerBound)", "spread");
  out << line;
  for (const CompareRow& row : matrix) {
    std::snprintf(line, sizeof(line),
                  "%-6s %12.3f %14.4f %14.4f %14.4f %14.4f %10.4f\n",
                  row.algorithm.c_str(), row.mean_time, row.fitness[0],
                  row.fitness[1], row.fitness[2], row.fitness[3], row.spread);
    out << line;
  }
  return out.str();
}

void write_compare_csv(const std::filesystem::path& path,
                       const std::vector<CompareRow>& matrix) {
  std::string csv =
      "algorithm,execution_time_s,fitness_mean,fitness_random,"
      "fitness_upper_bound,fitness_lower_bound,spread\n";
  for (const CompareRow& row : matrix) {
    csv += row.algorithm;
    csv += ',';
    csv += format_double(row.mean_time);
    for (double f : row.fitness) {
      csv += ',';
      csv += format_double(f);
    }
    csv += ',';
    csv += format_double(row.spread);
    csv += '\n';
  }
  write_text_file(path, csv);
}

}  // namespace rbopt
