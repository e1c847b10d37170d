#include "crofton/runner.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace crofton {

const char* kCsvHeader =
    "experiment_id,mode,n,k,r,j,q,body,mean,stderr,exact,z,samples,seconds";

namespace {

double now_seconds() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

std::string g17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string experiment_id(const ExperimentConfig& c, const std::string& suffix) {
  std::ostringstream os;
  os << c.mode << "-" << (c.design == Design::Rotational ? "rot" : "vert") << "-n" << c.idx.n
     << "k" << c.idx.k << "r" << c.idx.r << "j" << c.idx.j << "q" << c.idx.q << "-"
     << c.body_tag << "-s" << c.seed;
  if (!suffix.empty()) os << "-" << suffix;
  return os.str();
}

ResultRow estimate_row(const ExperimentConfig& c, const Estimate& e, double secs,
                       const std::string& suffix) {
  ResultRow row;
  row.id = experiment_id(c, suffix);
  row.mode = c.mode;
  row.n = c.idx.n;
  row.k = c.idx.k;
  row.r = c.idx.r;
  row.j = c.idx.j;
  row.q = c.idx.q;
  row.body_tag = c.body_tag;
  row.mean = e.mean;
  row.std_err = e.std_err;
  row.samples = e.count;
  row.seconds = secs;
  try {
    row.exact = exact_intrinsic_volume(*c.body, c.idx.n - c.idx.j);
    row.has_exact = true;
    row.z = (e.std_err > 0.0) ? (e.mean - row.exact) / e.std_err : 0.0;
  } catch (const not_available&) {
    row.has_exact = false;
  }
  return row;
}

Estimate run_estimator(const ExperimentConfig& c, long long outer, int jobs) {
  EstimatorSpec spec = c.estimator_spec();
  spec.outer_samples = outer;
  if (c.design == Design::Rotational)
    return rotational_crofton_estimate(spec, c.route, jobs);
  return vertical_sections_estimate(spec, jobs);
}

}  // namespace

RunResult run(const ExperimentConfig& config, int jobs) {
  RunResult result;
  if (config.mode == "estimate") {
    double t0 = now_seconds();
    Estimate e = run_estimator(config, config.outer_samples, jobs);
    ResultRow row = estimate_row(config, e, now_seconds() - t0, "");
    if (row.has_exact && row.std_err > 0.0 && std::fabs(row.z) > 4.0)
      result.all_passed = false;
    result.rows.push_back(std::move(row));
  } else if (config.mode == "convergence") {
    int step = 0;
    for (long long nsamp = 1000; nsamp <= config.budget; nsamp *= 10, ++step) {
      ExperimentConfig c = config;
      c.seed = RngStream::mix(config.seed, static_cast<std::uint64_t>(step));
      double t0 = now_seconds();
      Estimate e = run_estimator(c, nsamp, jobs);
      ResultRow row = estimate_row(config, e, now_seconds() - t0,
                                   "N" + std::to_string(nsamp));
      if (row.has_exact && row.std_err > 0.0 && std::fabs(row.z) > 4.0)
        result.all_passed = false;
      result.rows.push_back(std::move(row));
    }
  } else {  // verify
    double t0 = now_seconds();
    std::vector<CheckReport> reports =
        run_battery(config.checks, config.seed, config.budget, jobs);
    double secs = now_seconds() - t0;
    for (const CheckReport& rep : reports) {
      ResultRow row;
      row.id = rep.name;
      row.mode = "verify";
      row.body_tag = rep.passed ? "pass" : "FAIL";
      row.mean = rep.lhs;
      row.std_err = rep.lhs_se;
      row.exact = rep.rhs;
      row.has_exact = true;
      double se = std::sqrt(rep.lhs_se * rep.lhs_se + rep.rhs_se * rep.rhs_se);
      row.z = se > 0.0 ? (rep.lhs - rep.rhs) / se : 0.0;
      row.samples = config.budget;
      row.seconds = secs / reports.size();
      if (!rep.passed) result.all_passed = false;
      result.rows.push_back(std::move(row));
    }
  }
  return result;
}

void emit_csv(const std::vector<ResultRow>& rows, const std::string& path) {
  if (rows.empty()) throw std::invalid_argument("emit_csv: no rows");
  std::ofstream f(path);
  if (!f) throw std::runtime_error("emit_csv: cannot open " + path);
  f << kCsvHeader << "\n";
  for (const ResultRow& r : rows) {
    f << r.id << "," << r.mode << "," << r.n << "," << r.k << "," << r.r << "," << r.j << ","
      << r.q << "," << r.body_tag << "," << g17(r.mean) << "," << g17(r.std_err) << ",";
    if (r.has_exact)
      f << g17(r.exact) << "," << g17(r.z);
    else
      f << ",";
    f << "," << r.samples << "," << g17(r.seconds) << "\n";
  }
}

std::vector<ResultRow> parse_csv(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("parse_csv: cannot open " + path);
  std::string line;
  if (!std::getline(f, line) || line != kCsvHeader)
    throw std::runtime_error("parse_csv: unexpected header");
  std::vector<ResultRow> rows;
  while (std::getline(f, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
      if (c == ',') {
        fields.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    fields.push_back(cur);
    if (fields.size() != 14) throw std::runtime_error("parse_csv: bad field count");
    ResultRow r;
    r.id = fields[0];
    r.mode = fields[1];
    r.n = std::stoi(fields[2]);
    r.k = std::stoi(fields[3]);
    r.r = std::stoi(fields[4]);
    r.j = std::stoi(fields[5]);
    r.q = std::stoi(fields[6]);
    r.body_tag = fields[7];
    r.mean = std::stod(fields[8]);
    r.std_err = std::stod(fields[9]);
    r.has_exact = !fields[10].empty();
    if (r.has_exact) {
      r.exact = std::stod(fields[10]);
      r.z = std::stod(fields[11]);
    }
    r.samples = std::stoll(fields[12]);
    r.seconds = std::stod(fields[13]);
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace crofton
