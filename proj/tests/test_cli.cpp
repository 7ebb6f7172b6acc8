// Exit-code and file contract tests against the built command line tool.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    static int counter = 0;
    path = fs::temp_directory_path() /
           ("rbopt_cli_" + std::to_string(::getpid()) + "_" +
            std::to_string(counter++));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

int run_cli(const std::string& args, const fs::path& stdout_file) {
  const std::string cmd = std::string(RBOPT_CLI_PATH) + " " + args + " > " +
                          stdout_file.string() + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream out(p);
  out << text;
}

}  // namespace

TEST_CASE("missing or malformed configs exit 2") {
  TempDir dir;
  CHECK(run_cli("run " + (dir.path / "nope.json").string(),
                dir.path / "out.txt") == 2);

  write_file(dir.path / "bad.json", "{ this is not json");
  CHECK(run_cli("run " + (dir.path / "bad.json").string(),
                dir.path / "out.txt") == 2);

  write_file(dir.path / "empty_runs.json", R"({"runs": []})");
  CHECK(run_cli("run " + (dir.path / "empty_runs.json").string(),
                dir.path / "out.txt") == 2);
}

TEST_CASE("dump with missing flags exits 2") {
  TempDir dir;
  CHECK(run_cli("dump --xr 100 --yr 100", dir.path / "out.txt") == 2);
}

TEST_CASE("dump emits finite JSON for a converged design") {
  TempDir dir;
  const int code = run_cli(
      "dump --xr 100.01 --yr 299.98 --zr 100.00 --gamma 171.48 --xb 100 "
      "--yb1 199.80 --yb2 297.20 --clearance 100 --lrb 499.86 --gear 1.13",
      dir.path / "out.json");
  CHECK(code == 0);

  const auto j = nlohmann::json::parse(slurp(dir.path / "out.json"));
  CHECK(j.contains("design"));
  CHECK(j.contains("mechanism"));
  CHECK(j.contains("forces"));
  CHECK(j.contains("metrics"));
  CHECK(std::isfinite(j.at("fitness").get<double>()));
}

TEST_CASE("dump clamps out-of-bounds values with a warning") {
  TempDir dir;
  const int code = run_cli(
      "dump --xr 9999 --yr 200 --zr 150 --gamma 135 --xb 150 --yb1 200 "
      "--yb2 200 --clearance 60 --lrb 275 --gear 3",
      dir.path / "out.json");
  CHECK(code == 0);
  const auto j = nlohmann::json::parse(slurp(dir.path / "out.json"));
  CHECK(j.at("design").at("x_r").get<double>() == 500.0);
}

TEST_CASE("run writes histories and summaries and exits 0") {
  TempDir dir;
  write_file(dir.path / "cfg.json", R"({
    "runs": [{"algorithm": "DE", "budget_evals": 1000, "generations": 20,
              "seed": 9, "init_strategy": "Random"}],
    "repetitions": 2,
    "output_dir": ")" + (dir.path / "out").string() + R"("
  })");

  CHECK(run_cli("run " + (dir.path / "cfg.json").string(),
                dir.path / "stdout.txt") == 0);
  CHECK(fs::exists(dir.path / "out" / "history_DE_Random_0.csv"));
  CHECK(fs::exists(dir.path / "out" / "history_DE_Random_1.csv"));
  CHECK(fs::exists(dir.path / "out" / "summary.csv"));
  CHECK(fs::exists(dir.path / "out" / "summary.json"));
}

TEST_CASE("run with --dump-state and --dump-metrics writes the JSON dumps") {
  TempDir dir;
  write_file(dir.path / "cfg.json", R"({
    "runs": [{"algorithm": "SA", "budget_evals": 500, "generations": 10,
              "seed": 1, "init_strategy": "Mean"}],
    "output_dir": ")" + (dir.path / "out").string() + R"("
  })");

  CHECK(run_cli("--dump-state --dump-metrics run " +
                    (dir.path / "cfg.json").string(),
                dir.path / "stdout.txt") == 0);
  CHECK(fs::exists(dir.path / "out" / "state_SA_Mean_0.json"));
  CHECK(fs::exists(dir.path / "out" / "metrics_SA_Mean_0.json"));
}

TEST_CASE("a broken scenario is a runtime evaluation failure: exit 3") {
  TempDir dir;
  write_file(dir.path / "cfg.json", R"({
    "scenario": {"torque_const": 0.0},
    "runs": [{"algorithm": "SA", "budget_evals": 200, "generations": 5}],
    "output_dir": ")" + (dir.path / "out").string() + R"("
  })");
  CHECK(run_cli("run " + (dir.path / "cfg.json").string(),
                dir.path / "stdout.txt") == 3);
}

TEST_CASE("compare emits the matrix and the csv") {
  TempDir dir;
  write_file(dir.path / "cfg.json", R"({
    "runs": [{"algorithm": "DE", "budget_evals": 800, "generations": 10,
              "seed": 4}],
    "repetitions": 1,
    "output_dir": ")" + (dir.path / "out").string() + R"("
  })");

  CHECK(run_cli("compare " + (dir.path / "cfg.json").string(),
                dir.path / "stdout.txt") == 0);
  const std::string table = slurp(dir.path / "stdout.txt");
  CHECK(table.find("f(Mean)") != std::string::npos);
  CHECK(table.find("DE") != std::string::npos);
  CHECK(fs::exists(dir.path / "out" / "compare.csv"));
  // 1 algorithm x 4 strategies x 1 repetition histories
  CHECK(fs::exists(dir.path / "out" / "history_DE_Mean_0.csv"));
  CHECK(fs::exists(dir.path / "out" / "history_DE_Random_0.csv"));
  CHECK(fs::exists(dir.path / "out" / "history_DE_UpperBound_0.csv"));
  CHECK(fs::exists(dir.path / "out" / "history_DE_LowerBound_0.csv"));
}

TEST_CASE("rerunning the same config is byte-identical modulo wall time") {
  TempDir dir;
  const std::string out_a = (dir.path / "a").string();
  const std::string out_b = (dir.path / "b").string();
  write_file(dir.path / "cfg.json", R"({
    "runs": [{"algorithm": "PSO", "budget_evals": 1500, "generations": 30,
              "seed": 11, "init_strategy": "Random"}],
    "repetitions": 2
  })");

  CHECK(run_cli("--out-dir " + out_a + " run " +
                    (dir.path / "cfg.json").string(),
                dir.path / "s1.txt") == 0);
  CHECK(run_cli("--out-dir " + out_b + " run " +
                    (dir.path / "cfg.json").string(),
                dir.path / "s2.txt") == 0);

  for (int rep = 0; rep < 2; ++rep) {
    const std::string name =
        "history_PSO_Random_" + std::to_string(rep) + ".csv";
    CHECK(slurp(fs::path(out_a) / name) == slurp(fs::path(out_b) / name));
  }
}

TEST_CASE("global flags are accepted after the subcommand too") {
  TempDir dir;
  write_file(dir.path / "cfg.json", R"({
    "runs": [{"algorithm": "SA", "budget_evals": 300, "generations": 5,
              "seed": 2}]
  })");
  CHECK(run_cli("run " + (dir.path / "cfg.json").string() + " --out-dir " +
                    (dir.path / "out").string() + " --workers 1",
                dir.path / "stdout.txt") == 0);
  CHECK(fs::exists(dir.path / "out" / "summary.csv"));
}

TEST_CASE("testfuncs validates every optimizer and exits 0") {
  TempDir dir;
  CHECK(run_cli("testfuncs", dir.path / "report.txt") == 0);
  const std::string report = slurp(dir.path / "report.txt");
  CHECK(report.find("PASS  sphere") != std::string::npos);
  CHECK(report.find("rastrigin") != std::string::npos);
  CHECK(report.find("info  rosenbrock") != std::string::npos);
  CHECK(report.find("seeds:") != std::string::npos);
  CHECK(report.find("FAIL") == std::string::npos);
}
