#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "crofton/constants.hpp"
#include "crofton/verify.hpp"
#include "doctest.h"

using namespace crofton;

namespace {
ConvexBody unit_ball(int n) { return ConvexBody::ball(zeros(n), 1.0); }
}  // namespace

TEST_CASE("classical crofton two-route checks") {
  // planes against the volume, lines-from-planes against the width, and
  // the point-process volume identity
  CheckReport a = check_classical_crofton(3, 2, 0, unit_ball(3), 100000, 101);
  CHECK(a.passed);
  CHECK(a.rhs == doctest::Approx(kappa(3)).epsilon(1e-12));

  CheckReport b = check_classical_crofton(3, 2, 2, unit_ball(3), 100000, 102);
  CHECK(b.passed);
  // c^{1,2}_{0,3} * V_1(B^3) = 1/2 * 4 = 2
  CHECK(b.rhs == doctest::Approx(2.0).epsilon(1e-12));

  CheckReport c = check_classical_crofton(3, 0, 0, unit_ball(3), 100000, 103);
  CHECK(c.passed);
  CHECK(c.rhs == doctest::Approx(kappa(3)).epsilon(1e-12));

  CHECK_THROWS_AS(check_classical_crofton(3, 1, 2, unit_ball(3), 10, 1), std::domain_error);
}

TEST_CASE("linear blaschke-petkantschin with a fixed subspace") {
  // k = n degenerates to alpha = 1 and a single outer subspace
  CheckReport triv = check_bp_linear(3, 1, 1, 3, 201, 100000);
  CHECK(triv.passed);

  CheckReport a = check_bp_linear(4, 1, 1, 3, 202, 400000);
  CHECK(a.passed);

  // the q = 0 branch
  CheckReport b = check_bp_linear(3, 0, 1, 2, 203, 400000);
  CHECK(b.passed);

  CHECK_THROWS_AS(check_bp_linear(3, 2, 1, 3, 1, 10), std::domain_error);
}

TEST_CASE("affine blaschke-petkantschin with a fixed subspace") {
  CheckReport triv = check_bp_affine(3, 1, 1, 3, 301, 100000);
  CHECK(triv.passed);

  CheckReport a = check_bp_affine(3, 1, 1, 2, 302, 400000);
  CHECK(a.passed);

  // q = k - r boundary: the reduced constant form is undefined there
  CheckReport b = check_bp_affine(4, 2, 1, 3, 303, 400000);
  CHECK(b.passed);
  CHECK(b.details.find("boundary") != std::string::npos);

  CHECK_THROWS_AS(check_bp_affine(3, 2, 1, 2, 1, 10), std::domain_error);
}

TEST_CASE("measurement function does not depend on q") {
  CheckReport a = check_uniqueness_q(4, 3, 0, 0, unit_ball(4), 4, 20000, 401);
  CHECK(a.passed);
  CheckReport b = check_uniqueness_q(4, 3, 0, 1,
                                     ConvexBody::box(Vec{-1, -1, -1, -1}, Vec{1, 1, 1, 1}), 4,
                                     20000, 402);
  CHECK(b.passed);

  // singleton q-range is reported, not tested
  CheckReport s = check_uniqueness_q(3, 2, 1, 0, unit_ball(3), 4, 100, 403);
  CHECK(s.passed);
  CHECK(s.details.find("singleton") != std::string::npos);
}

TEST_CASE("vertical measurement function does not depend on q") {
  CheckReport a = check_uniqueness_q_affine(3, 2, 1, 0, unit_ball(3), 4, 20000, 501);
  CHECK(a.passed);
  CheckReport b = check_uniqueness_q_affine(4, 3, 1, 1, unit_ball(4), 4, 20000, 502);
  CHECK(b.passed);
  CheckReport s = check_uniqueness_q_affine(3, 2, 1, 1, unit_ball(3), 4, 100, 503);
  CHECK(s.passed);
  CHECK(s.details.find("singleton") != std::string::npos);
}

TEST_CASE("distance-weight lemma routes agree") {
  CheckReport a = check_lemma_D(5, 2, 1, 200, 601);
  CHECK(a.passed);
  CheckReport b = check_lemma_D(4, 1, 2, 200, 602);
  CHECK(b.passed);
  CheckReport c = check_lemma_D(3, 0, 1, 200, 603);
  CHECK(c.passed);
  CHECK_THROWS_AS(check_lemma_D(3, 2, 1, 10, 1), std::domain_error);
}

TEST_CASE("sphere identities") {
  for (int n : {3, 4, 5}) {
    CheckReport rep = check_sphere_identities(n, 700 + n, 100000);
    CHECK(rep.passed);
  }
}

TEST_CASE("impossibility construction") {
  CheckReport m0 = impossibility_demo(3, 2, 1, 0, 801, 1000000);
  CHECK(m0.passed);
  CHECK(m0.lhs == 1.0);
  CHECK(m0.rhs == 0.0);

  CheckReport a = impossibility_demo(3, 2, 1, 2, 802, 1000000);
  CHECK(a.passed);
  CHECK(a.lhs > 0.0);

  CheckReport b = impossibility_demo(4, 3, 1, 1, 803, 1000000);
  CHECK(b.passed);

  CHECK_THROWS_AS(impossibility_demo(3, 3, 1, 0, 1, 10), std::domain_error);
  CHECK_THROWS_AS(impossibility_demo(3, 2, 1, 3, 1, 10), std::domain_error);
}

TEST_CASE("battery subsets run concurrently and name their checks") {
  std::vector<CheckReport> reps = run_battery({"lemma-d"}, 901, 1000, 2);
  CHECK(reps.size() == 2);
  for (const auto& r : reps) {
    CHECK(r.passed);
    CHECK(r.name == "distance-weight-lemma");
  }
  CHECK_THROWS_AS(run_battery({"no-such-check"}, 1, 10, 1), config_error);
  CHECK(battery_check_names().size() >= 20);
}
