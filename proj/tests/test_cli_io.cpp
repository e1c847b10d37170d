#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <cstdio>
#include <string>

#include "crofton/constants.hpp"
#include "crofton/runner.hpp"
#include "doctest.h"

using namespace crofton;

namespace {

const char* kVerticalRotator = R"(
# planes through a fixed vertical axis, volume target
mode = estimate
design = rotational
n = 3
k = 2
r = 1
j = 0
q = 0
body = ball
center = 0 0 0
radius = 1
l0 = 0 0 1
outer = 4000
inner = 32
seed = 42
)";

std::string with_line(const std::string& base, const std::string& extra) {
  return base + "\n" + extra + "\n";
}

std::string replace_first(std::string text, const std::string& from, const std::string& to) {
  auto pos = text.find(from);
  REQUIRE(pos != std::string::npos);
  return text.replace(pos, from.size(), to);
}

}  // namespace

TEST_CASE("a vertical-rotator config parses and validates") {
  ExperimentConfig cfg = parse_config(kVerticalRotator);
  CHECK(cfg.mode == "estimate");
  CHECK(cfg.idx.n == 3);
  CHECK(cfg.idx.k == 2);
  CHECK(cfg.body.has_value());
  CHECK(cfg.fixed_subspace().dim() == 1);
  CHECK(cfg.seed == 42);
}

TEST_CASE("rotational design rejects j beyond k-(r+1), vertical accepts it") {
  std::string bad = replace_first(kVerticalRotator, "j = 0", "j = 1");
  bad = replace_first(bad, "q = 0", "q = 1");
  CHECK_THROWS_WITH_AS(parse_config(bad),
                       doctest::Contains("k-(r+1)"), config_error);
  std::string ok = replace_first(bad, "design = rotational", "design = vertical");
  CHECK_NOTHROW(parse_config(ok));
}

TEST_CASE("config diagnostics name the offending key") {
  CHECK_THROWS_WITH_AS(parse_config(with_line(kVerticalRotator, "wat = 1")),
                       doctest::Contains("wat"), config_error);
  CHECK_THROWS_WITH_AS(parse_config(with_line(kVerticalRotator, "seed = 1")),
                       doctest::Contains("duplicate"), config_error);
  CHECK_THROWS_WITH_AS(parse_config(replace_first(kVerticalRotator, "center = 0 0 0",
                                                  "center = 0 0")),
                       doctest::Contains("center"), config_error);
  CHECK_THROWS_WITH_AS(parse_config(replace_first(kVerticalRotator, "l0 = 0 0 1",
                                                  "l0 = 0 0 1\nl0 = 0 0 2")),
                       doctest::Contains("l0"), config_error);
  CHECK_THROWS_WITH_AS(parse_config(replace_first(kVerticalRotator, "radius = 1",
                                                  "radius = -2")),
                       doctest::Contains("body"), config_error);
  CHECK_THROWS_WITH_AS(parse_config(replace_first(kVerticalRotator, "mode = estimate",
                                                  "mode = guess")),
                       doctest::Contains("mode"), config_error);
}

TEST_CASE("polytope bodies come from repeated normal/offset rows") {
  std::string cfg_text = R"(
mode = estimate
n = 3
k = 2
r = 1
j = 0
q = 0
body = polytope
normal = 1 0 0
offset = 1
normal = -1 0 0
offset = 1
normal = 0 1 0
offset = 1
normal = 0 -1 0
offset = 1
normal = 0 0 1
offset = 1
normal = 0 0 -1
offset = 1
l0 = 0 0 1
outer = 10
inner = 8
)";
  ExperimentConfig cfg = parse_config(cfg_text);
  REQUIRE(cfg.body.has_value());
  CHECK(cfg.body->kind() == BodyKind::Polytope);
  CHECK(cfg.body->vertices().size() == 8);
}

TEST_CASE("estimate run produces a checked row") {
  ExperimentConfig cfg = parse_config(kVerticalRotator);
  RunResult res = run(cfg, 2);
  REQUIRE(res.rows.size() == 1);
  const ResultRow& row = res.rows[0];
  CHECK(row.has_exact);
  CHECK(row.exact == doctest::Approx(kappa(3)).epsilon(1e-12));
  CHECK(std::fabs(row.z) <= 4.0);
  CHECK(row.samples == 4000);
  CHECK(res.all_passed);
}

TEST_CASE("row content does not depend on the job count") {
  ExperimentConfig cfg = parse_config(kVerticalRotator);
  RunResult a = run(cfg, 1);
  RunResult b = run(cfg, 2);
  REQUIRE(a.rows.size() == b.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    CHECK(a.rows[i].mean == b.rows[i].mean);
    CHECK(a.rows[i].std_err == b.rows[i].std_err);
    CHECK(a.rows[i].id == b.rows[i].id);
  }
}

TEST_CASE("convergence mode shrinks the standard error") {
  std::string cfg_text = replace_first(kVerticalRotator, "mode = estimate",
                                       "mode = convergence");
  cfg_text = with_line(cfg_text, "budget = 100000");
  ExperimentConfig cfg = parse_config(cfg_text);
  RunResult res = run(cfg, 2);
  REQUIRE(res.rows.size() == 3);  // 10^3, 10^4, 10^5
  CHECK(res.rows[0].samples == 1000);
  CHECK(res.rows[2].samples == 100000);
  CHECK(res.rows[2].std_err < res.rows[0].std_err);
}

TEST_CASE("verify mode emits one row per check") {
  std::string cfg_text = "mode = verify\nbudget = 2000\ncheck = lemma-d\nseed = 5\n";
  ExperimentConfig cfg = parse_config(cfg_text);
  RunResult res = run(cfg, 2);
  REQUIRE(res.rows.size() == 2);
  CHECK(res.all_passed);
  for (const auto& row : res.rows) CHECK(row.body_tag == "pass");
}

TEST_CASE("csv round-trips bit-exactly") {
  ExperimentConfig cfg = parse_config(kVerticalRotator);
  RunResult res = run(cfg, 2);
  const std::string path = "cli_io_roundtrip.csv";
  emit_csv(res.rows, path);
  std::vector<ResultRow> back = parse_csv(path);
  REQUIRE(back.size() == res.rows.size());
  for (std::size_t i = 0; i < back.size(); ++i) {
    CHECK(back[i].mean == res.rows[i].mean);
    CHECK(back[i].std_err == res.rows[i].std_err);
    CHECK(back[i].exact == res.rows[i].exact);
    CHECK(back[i].z == res.rows[i].z);
    CHECK(back[i].samples == res.rows[i].samples);
    CHECK(back[i].seconds == res.rows[i].seconds);
    CHECK(back[i].id == res.rows[i].id);
  }
  std::remove(path.c_str());

  CHECK_THROWS_AS(emit_csv({}, "nope.csv"), std::invalid_argument);
  FILE* f = std::fopen("nope.csv", "r");
  CHECK(f == nullptr);
}
