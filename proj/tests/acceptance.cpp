// Acceptance suite: every criterion runs at its stated budget and
// tolerance and prints one pass/fail line. All statistical gates use the
// four-sigma rule on reported standard errors; deterministic gates use
// the stated relative tolerances.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <chrono>
#include <cmath>
#include <cstdio>

#include "crofton/constants.hpp"
#include "crofton/estimators.hpp"
#include "crofton/verify.hpp"
#include "doctest.h"

using namespace crofton;

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr std::uint64_t kSeed = 20260808;

double z_of(const Estimate& e, double exact) {
  return e.std_err > 0.0 ? (e.mean - exact) / e.std_err : 0.0;
}

void report(const char* tag, bool pass, const char* what, double got, double want,
            double z) {
  std::printf("[%s] %s %s: value=%.6g target=%.6g worst|z|=%.2f\n", tag,
              pass ? "PASS" : "FAIL", what, got, want, std::fabs(z));
}

Subspace axis(int n, int r) {
  std::vector<Vec> f;
  for (int i = 0; i < r; ++i) f.push_back(basis_vec(n, n - 1 - i));
  return Subspace(n, f);
}

}  // namespace

TEST_CASE("A1 vertical rotator volume") {
  auto t0 = std::chrono::steady_clock::now();
  ConvexBody ball = ConvexBody::ball(zeros(3), 1.0);
  EstimatorSpec spec{{3, 2, 1, 0, 0}, ball, axis(3, 1), 100000, 64, 0.0, kSeed};
  Estimate e = rotational_crofton_estimate(spec, PhiRoute::Generic, 2);
  double z = z_of(e, kappa(3));
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  bool pass = std::fabs(z) <= 4.0 && secs < 60.0;
  report("A1", pass, "planes through an axis, ball volume", e.mean, kappa(3), z);
  CHECK(std::fabs(z) <= 4.0);
  CHECK(secs < 60.0);
}

TEST_CASE("A2 radial measurement equals the ball volume on every section") {
  struct Cfg {
    int n, k, r;
  };
  const Cfg cfgs[] = {{3, 2, 1}, {4, 3, 1}, {5, 3, 2}};
  double worst = 0.0;
  bool pass = true;
  for (const Cfg& c : cfgs) {
    ConvexBody ball = ConvexBody::ball(zeros(c.n), 1.0);
    Subspace L0 = axis(c.n, c.r);
    EstimatorSpec spec{{c.n, c.k, c.r, 0, 0}, ball, L0, 1, 4000, 0.0, kSeed};
    RngStream rng = RngStream(kSeed).substream(200 + c.n);
    for (int t = 0; t < 50; ++t) {
      Subspace L = sample_grassmannian_containing(L0, c.k, rng);
      Estimate e = measurement_phi_radial(spec, L, rng);
      double z = z_of(e, kappa(c.n));
      worst = std::max(worst, std::fabs(z));
      if (std::fabs(z) > 4.0) pass = false;
    }
  }
  report("A2", pass, "radial route, 150 section subspaces", worst, 4.0, worst);
  CHECK(pass);
}

TEST_CASE("A3 free-subspace reductions: nucleator and surfactor") {
  ConvexBody ball = ConvexBody::ball(zeros(3), 1.0);
  EstimatorSpec nuc{{3, 1, 0, 0, 0}, ball, Subspace::trivial(3), 100000, 64, 0.0, kSeed + 1};
  Estimate en = rotational_crofton_estimate(nuc, PhiRoute::Generic, 2);
  double zn = z_of(en, kappa(3));

  EstimatorSpec surf{{3, 2, 0, 1, 1}, ball, Subspace::trivial(3), 100000, 64, 0.0, kSeed + 2};
  Estimate es = rotational_crofton_estimate(surf, PhiRoute::Generic, 2);
  double zs = z_of(es, 2.0 * kPi);

  bool pass = std::fabs(zn) <= 4.0 && std::fabs(zs) <= 4.0;
  report("A3", pass, "nucleator volume / surfactor boundary", en.mean, kappa(3),
         std::max(std::fabs(zn), std::fabs(zs)));
  CHECK(std::fabs(zn) <= 4.0);
  CHECK(std::fabs(zs) <= 4.0);
}

TEST_CASE("A4 weighted line integral in four dimensions") {
  ConvexBody ball = ConvexBody::ball(zeros(4), 1.0);
  EstimatorSpec spec{{4, 3, 1, 1, 1}, ball, axis(4, 1), 100000, 64, 0.0, kSeed + 3};
  Estimate e = rotational_crofton_estimate(spec, PhiRoute::Generic, 2);
  double z = z_of(e, kPi * kPi);
  report("A4", std::fabs(z) <= 4.0, "boundary measure of the 4-ball", e.mean, kPi * kPi, z);
  CHECK(std::fabs(z) <= 4.0);
}

TEST_CASE("A5 unit cube volume through axis planes") {
  ConvexBody cube = ConvexBody::box(Vec{-0.3, -0.4, -0.2}, Vec{0.7, 0.6, 0.8});
  EstimatorSpec spec{{3, 2, 1, 0, 0}, cube, axis(3, 1), 100000, 64, 0.0, kSeed + 4};
  Estimate e = rotational_crofton_estimate(spec, PhiRoute::Generic, 2);
  double z = z_of(e, 1.0);
  report("A5", std::fabs(z) <= 4.0, "shifted unit cube volume", e.mean, 1.0, z);
  CHECK(std::fabs(z) <= 4.0);
}

TEST_CASE("A6 blaschke-petkantschin two-route identities") {
  CheckReport l1 = check_bp_linear(4, 1, 1, 3, kSeed + 5, 1000000);
  CheckReport l2 = check_bp_linear(3, 0, 1, 2, kSeed + 6, 1000000);
  CheckReport a1 = check_bp_affine(3, 1, 1, 2, kSeed + 7, 1000000);
  CheckReport a2 = check_bp_affine(4, 2, 1, 3, kSeed + 8, 1000000);
  bool pass = l1.passed && l2.passed && a1.passed && a2.passed;
  report("A6", pass, "linear and affine pivot identities", l1.lhs, l1.rhs, 0.0);
  CHECK(l1.passed);
  CHECK(l2.passed);
  CHECK(a1.passed);
  CHECK(a2.passed);
}

TEST_CASE("A7 vertical sections") {
  ConvexBody ball = ConvexBody::ball(zeros(3), 1.0);
  Subspace L0 = axis(3, 1);

  EstimatorSpec s1{{3, 2, 1, 1, 1}, ball, L0, 100000, 32, 0.0, kSeed + 9};
  Estimate e1 = vertical_sections_estimate(s1, 2);
  double z1 = z_of(e1, 2.0 * kPi);

  double zv[2];
  for (int q = 0; q <= 1; ++q) {
    EstimatorSpec s{{3, 2, 1, 0, q}, ball, L0, 100000, 32, 0.0, kSeed + 10 + q};
    Estimate e = vertical_sections_estimate(s, 2);
    zv[q] = z_of(e, kappa(3));
  }
  bool pass = std::fabs(z1) <= 4.0 && std::fabs(zv[0]) <= 4.0 && std::fabs(zv[1]) <= 4.0;
  report("A7", pass, "parallel-plane designs, boundary and volume", e1.mean, 2.0 * kPi,
         std::max({std::fabs(z1), std::fabs(zv[0]), std::fabs(zv[1])}));
  CHECK(std::fabs(z1) <= 4.0);
  CHECK(std::fabs(zv[0]) <= 4.0);
  CHECK(std::fabs(zv[1]) <= 4.0);
}

TEST_CASE("A8 measurement functions independent of the inner flat dimension") {
  CheckReport u1 =
      check_uniqueness_q(4, 3, 0, 0, ConvexBody::ball(zeros(4), 1.0), 10, 20000, kSeed + 12);
  CheckReport u2 =
      check_uniqueness_q(5, 4, 1, 0, ConvexBody::ball(zeros(5), 1.0), 10, 20000, kSeed + 13);
  bool pass = u1.passed && u2.passed;
  report("A8", pass, "q-independence over 10 subspaces each", u1.lhs, u1.rhs, 0.0);
  CHECK(u1.passed);
  CHECK(u2.passed);
}

TEST_CASE("A9 no section functional reaches low intrinsic volumes") {
  CheckReport m0 = impossibility_demo(3, 2, 1, 0, kSeed + 14, 10000000);
  CheckReport d1 = impossibility_demo(3, 2, 1, 2, kSeed + 15, 10000000);
  CheckReport d2 = impossibility_demo(4, 3, 1, 1, kSeed + 16, 10000000);
  bool pass = m0.passed && d1.passed && d2.passed;
  report("A9", pass, "indistinguishable bodies with different V_m", 1.0, 0.0, 0.0);
  CHECK(m0.passed);
  CHECK(d1.passed);
  CHECK(d2.passed);
}

TEST_CASE("A10 deterministic kernel suite") {
  // distance-weight lemma, 200 trials per admissible configuration
  bool lemma_ok = true;
  for (int n = 3; n <= 5; ++n)
    for (int q = 0; q <= n - 1; ++q)
      for (int r = 0; q + r <= n - 1; ++r) {
        CheckReport rep = check_lemma_D(n, q, r, 200, kSeed + 17 + n * 100 + q * 10 + r);
        if (!rep.passed) lemma_ok = false;
      }

  // constant identities at 1e-12 relative
  bool const_ok = true;
  auto rel = [](double a, double b) {
    return std::fabs(a - b) / std::max({1.0, std::fabs(a), std::fabs(b)});
  };
  if (rel(c0_const(3, 2, 0, 1, 0), kPi) > 1e-12) const_ok = false;
  for (int n = 3; n <= 10 && const_ok; ++n)
    for (int k = 1; k <= n; ++k)
      for (int q = 0; q <= k - 1; ++q)
        if (rel(alpha_const(n, k, q, 0), omega(k - q) / omega(n - q)) > 1e-12)
          const_ok = false;
  for (int n = 3; n <= 10 && const_ok; ++n)
    for (int r = 0; r <= n - 1; ++r)
      for (int k = r + 1; k <= n; ++k)
        for (int q = 0; q <= k - r - 1; ++q) {
          double lhs = (b_coeff(k - r, q) / b_coeff(n - r, q)) * (b_coeff(n, q) / b_coeff(k, q));
          double rhs = alpha_const(n, k, q, r) * omega(n - r - q) / omega(k - r - q);
          if (rel(lhs, rhs) > 1e-12) const_ok = false;
        }
  for (int n = 3; n <= 10 && const_ok; ++n)
    for (int k = 1; k <= n; ++k)
      for (int j = 0; j <= k; ++j)
        if (rel(d_const(n, k, 0, j, k), crofton_const(n - j, k, k - j, n)) > 1e-12)
          const_ok = false;

  // sphere decomposition and projection moments at four sigma
  bool sphere_ok = true;
  for (int n : {3, 4, 5}) {
    CheckReport rep = check_sphere_identities(n, kSeed + 18 + n, 200000);
    if (!rep.passed) sphere_ok = false;
  }

  bool pass = lemma_ok && const_ok && sphere_ok;
  report("A10", pass, "lemma routes, constant identities, sphere checks", pass ? 1.0 : 0.0,
         1.0, 0.0);
  CHECK(lemma_ok);
  CHECK(const_ok);
  CHECK(sphere_ok);
}
