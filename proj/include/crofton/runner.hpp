#pragma once

#include <string>
#include <vector>

#include "crofton/config.hpp"
#include "crofton/verify.hpp"

namespace crofton {

// One output record. For estimator rows `exact` is the closed-form
// intrinsic volume when the body admits one; for verify rows lhs/rhs of
// the check are stored in mean/exact. Wall time is the only field that
// may differ between reruns of the same (config, seed, parallelism).
struct ResultRow {
  std::string id;
  std::string mode;
  int n = -1, k = -1, r = -1, j = -1, q = -1;
  std::string body_tag;
  double mean = 0.0;
  double std_err = 0.0;
  bool has_exact = false;
  double exact = 0.0;
  double z = 0.0;
  long long samples = 0;
  double seconds = 0.0;
};

struct RunResult {
  std::vector<ResultRow> rows;
  bool all_passed = true;  // 4-sigma rule for statistical rows
};

// Executes the experiment described by the config on up to `jobs` threads.
// Output is deterministic for fixed (config, seed), independent of jobs.
RunResult run(const ExperimentConfig& config, int jobs);

// RFC-4180-style CSV with a fixed documented header; floats are written
// with 17 significant digits so a reparse reproduces them bit-exactly.
void emit_csv(const std::vector<ResultRow>& rows, const std::string& path);

std::vector<ResultRow> parse_csv(const std::string& path);

extern const char* kCsvHeader;

}  // namespace crofton
