// Experiment runner for the Crofton estimator library: parses a flat
// key = value config, runs estimator / verification / convergence jobs in
// parallel, prints a summary table and optionally writes a CSV.
//
// Exit codes: 0 all-pass, 1 statistical failure, 2 config/domain error.

#include <cstdio>
#include <cstdlib>
#include <string>

#include "CLI11.hpp"
#include "crofton/runner.hpp"

namespace {

int default_jobs() {
  if (const char* env = std::getenv("CROFTON_JOBS")) {
    int j = std::atoi(env);
    if (j >= 1) return j;
  }
  return 1;
}

void print_rows(const std::vector<crofton::ResultRow>& rows) {
  std::printf("%-34s %-12s %14s %12s %14s %8s %10s %8s\n", "experiment", "body/status",
              "mean", "stderr", "exact", "z", "samples", "sec");
  for (const auto& r : rows) {
    std::printf("%-34s %-12s %14.6g %12.4g ", r.id.c_str(), r.body_tag.c_str(), r.mean,
                r.std_err);
    if (r.has_exact)
      std::printf("%14.6g %8.2f ", r.exact, r.z);
    else
      std::printf("%14s %8s ", "-", "-");
    std::printf("%10lld %8.2f\n", r.samples, r.seconds);
  }
}

int run_mode(const std::string& mode, const std::string& config_path, long long seed_flag,
             bool seed_set, int jobs, const std::string& out_flag, long long budget_flag,
             const std::vector<std::string>& checks) {
  using namespace crofton;
  try {
    ExperimentConfig cfg;
    if (!config_path.empty()) {
      cfg = parse_config_file(config_path);
      if (cfg.mode != mode)
        throw config_error("config mode '" + cfg.mode + "' does not match subcommand '" +
                           mode + "'");
    } else {
      if (mode != "verify")
        throw config_error("--config is required for " + mode + " mode");
      cfg.mode = "verify";
    }
    if (seed_set) cfg.seed = static_cast<std::uint64_t>(seed_flag);
    if (budget_flag > 0) cfg.budget = budget_flag;
    if (!checks.empty()) cfg.checks = checks;
    if (!out_flag.empty()) cfg.out_path = out_flag;

    RunResult result = run(cfg, jobs);
    print_rows(result.rows);
    if (!cfg.out_path.empty()) {
      emit_csv(result.rows, cfg.out_path);
      std::printf("wrote %zu row(s) to %s\n", result.rows.size(), cfg.out_path.c_str());
    }
    if (!result.all_passed) {
      std::printf("status: STATISTICAL FAILURE\n");
      return 1;
    }
    std::printf("status: all-pass\n");
    return 0;
  } catch (const config_error& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "domain error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monte Carlo estimators and identity checks for Crofton-type "
               "section formulas with a fixed subspace"};
  app.require_subcommand(1);

  std::string config_path, out_path;
  long long seed = 0, budget = 0;
  bool seed_set = false;
  int jobs = default_jobs();
  std::vector<std::string> checks;

  auto add_common = [&](CLI::App* cmd, bool config_required) {
    auto* copt = cmd->add_option("--config", config_path, "path to a key = value config");
    if (config_required) copt->required();
    cmd->add_option("--seed", seed, "override the config seed")->each([&](const std::string&) {
      seed_set = true;
    });
    cmd->add_option("--jobs", jobs, "worker threads (default $CROFTON_JOBS or 1)");
    cmd->add_option("--out", out_path, "CSV output path");
  };

  CLI::App* est = app.add_subcommand("estimate", "run one estimator configuration");
  add_common(est, true);
  CLI::App* ver = app.add_subcommand("verify", "run the identity-check battery");
  add_common(ver, false);
  ver->add_option("--budget", budget, "total MC budget per check");
  ver->add_option("--check", checks, "run only the named check(s)");
  CLI::App* conv = app.add_subcommand("convergence", "emit rows at growing sample counts");
  add_common(conv, true);

  CLI11_PARSE(app, argc, argv);

  if (est->parsed()) return run_mode("estimate", config_path, seed, seed_set, jobs, out_path, 0, {});
  if (ver->parsed())
    return run_mode("verify", config_path, seed, seed_set, jobs, out_path, budget, checks);
  return run_mode("convergence", config_path, seed, seed_set, jobs, out_path, 0, {});
}
