#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <stdexcept>
#include <vector>

#include "crofton/estimate.hpp"
#include "crofton/rng.hpp"
#include "doctest.h"

using namespace crofton;

TEST_CASE("rng streams are deterministic and key-splittable") {
  RngStream a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());

  // substream derivation ignores consumed state
  RngStream c(42);
  for (int i = 0; i < 17; ++i) c.next_double();
  RngStream s1 = RngStream(42).substream(3);
  RngStream s2 = c.substream(3);
  for (int i = 0; i < 20; ++i) CHECK(s1.next_u64() == s2.next_u64());

  // distinct substreams differ from each other and the root
  RngStream r(7), t0 = RngStream(7).substream(0), t1 = RngStream(7).substream(1);
  bool all_same = true;
  for (int i = 0; i < 8; ++i) {
    std::uint64_t x = r.next_u64(), y = t0.next_u64(), z = t1.next_u64();
    if (x != y || y != z) all_same = false;
  }
  CHECK_FALSE(all_same);
}

TEST_CASE("uniform and gaussian draws look sane") {
  RngStream rng(123);
  double sum = 0.0, sum2 = 0.0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    double u = rng.next_double();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    sum += u;
    sum2 += u * u;
  }
  CHECK(std::fabs(sum / n - 0.5) < 0.005);
  CHECK(std::fabs(sum2 / n - 1.0 / 3.0) < 0.005);

  double gsum = 0.0, gsum2 = 0.0;
  for (int i = 0; i < n; ++i) {
    double g = rng.next_gaussian();
    gsum += g;
    gsum2 += g * g;
  }
  CHECK(std::fabs(gsum / n) < 0.01);
  CHECK(std::fabs(gsum2 / n - 1.0) < 0.02);
}

TEST_CASE("merge keeps single parts and averages equal-count parts") {
  Estimate a{1.5, 0.1, 100, 9};
  Estimate merged = merge_estimates({a});
  CHECK(merged.mean == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(merged.count == 100);

  Estimate b{2.5, 0.1, 100, 9};
  Estimate ab = merge_estimates({a, b});
  CHECK(ab.mean == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(ab.count == 200);
}

TEST_CASE("chunked merge reproduces the single pass") {
  RngStream rng(2024);
  std::vector<double> xs(4096);
  for (double& x : xs) x = rng.next_gaussian() * 3.0 + 1.0;

  Accumulator single;
  for (double x : xs) single.add(x);
  Estimate whole = single.estimate(0);

  std::vector<Estimate> parts;
  for (int c = 0; c < 8; ++c) {
    Accumulator acc;
    for (int i = c * 512; i < (c + 1) * 512; ++i) acc.add(xs[i]);
    parts.push_back(acc.estimate(0));
  }
  Estimate merged = merge_estimates(parts);
  CHECK(std::fabs(merged.mean - whole.mean) <= 1e-12 * std::fabs(whole.mean));
  CHECK(std::fabs(merged.std_err - whole.std_err) <= 1e-12 * whole.std_err);
  CHECK(merged.count == whole.count);
}

TEST_CASE("merging an empty list is an error") {
  CHECK_THROWS_AS(merge_estimates({}), std::domain_error);
}

TEST_CASE("std_err is the sample deviation over sqrt(count)") {
  Accumulator acc;
  acc.add(1.0);
  acc.add(3.0);
  // sample variance 2, std err sqrt(2)/sqrt(2) = 1
  Estimate e = acc.estimate(0);
  CHECK(e.mean == doctest::Approx(2.0));
  CHECK(e.std_err == doctest::Approx(1.0).epsilon(1e-14));
  Accumulator one;
  one.add(5.0);
  CHECK(one.estimate(0).std_err == 0.0);
}
