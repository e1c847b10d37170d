#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <stdexcept>

#include "crofton/constants.hpp"
#include "doctest.h"

using namespace crofton;

namespace {
constexpr double kPi = 3.14159265358979323846;

bool rel_close(double a, double b, double tol) {
  return std::fabs(a - b) <= tol * std::max({1.0, std::fabs(a), std::fabs(b)});
}
}  // namespace

TEST_CASE("unit ball volumes") {
  CHECK(kappa(0) == 1.0);
  CHECK(kappa(1) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(kappa(2) == doctest::Approx(kPi).epsilon(1e-15));
  CHECK(kappa(3) == doctest::Approx(4.0 * kPi / 3.0).epsilon(1e-15));
  CHECK(kappa(4) == doctest::Approx(kPi * kPi / 2.0).epsilon(1e-15));
  CHECK_THROWS_AS(kappa(-1), std::domain_error);
  CHECK_THROWS_AS(kappa(65), std::domain_error);
}

TEST_CASE("unit sphere areas") {
  CHECK(omega(1) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(omega(2) == doctest::Approx(2.0 * kPi).epsilon(1e-15));
  CHECK(omega(3) == doctest::Approx(4.0 * kPi).epsilon(1e-15));
  CHECK(omega(4) == doctest::Approx(2.0 * kPi * kPi).epsilon(1e-15));
  CHECK_THROWS_AS(omega(0), std::domain_error);
}

TEST_CASE("omega equals n kappa and matches the lgamma route") {
  for (int n = 1; n <= 25; ++n) {
    CHECK(omega(n) == n * kappa(n));  // same double, by construction
    double indep = 2.0 * std::exp(0.5 * n * std::log(kPi) - std::lgamma(0.5 * n));
    CHECK(rel_close(omega(n), indep, 1e-13));
  }
}

TEST_CASE("b coefficients") {
  CHECK(b_coeff(3, 1) == doctest::Approx(2.0 * kPi).epsilon(1e-14));
  for (int n = 0; n <= 8; ++n) CHECK(b_coeff(n, 0) == 1.0);
  // (omega_3 omega_4) / (omega_1 omega_2) = (4pi * 2pi^2) / (2 * 2pi)
  CHECK(b_coeff(4, 2) == doctest::Approx(2.0 * kPi * kPi).epsilon(1e-14));
  CHECK_THROWS_AS(b_coeff(2, 3), std::domain_error);
}

TEST_CASE("crofton constants") {
  CHECK(crofton_const(3, 0, 0, 3) == doctest::Approx(1.0).epsilon(1e-14));
  for (int a = 0; a <= 6; ++a)
    for (int b = 0; b <= 6; ++b) CHECK(crofton_const(a, b, a, b) == 1.0);
  // upper (1,3), lower (2,1): (1! k1 / 2! k2)(3! k3 / 1! k1) = 4
  CHECK(crofton_const(2, 1, 1, 3) == doctest::Approx(4.0).epsilon(1e-14));
  CHECK_THROWS_AS(crofton_const(-1, 0, 0, 0), std::domain_error);
}

TEST_CASE("alpha constant") {
  CHECK(alpha_const(3, 2, 0, 1) == doctest::Approx(1.0 / kPi).epsilon(1e-14));
  CHECK(alpha_const(4, 3, 1, 1) == doctest::Approx(0.25).epsilon(1e-14));
  // r = 0 reduction: alpha = omega_{k-q} / omega_{n-q}
  for (int n = 3; n <= 10; ++n)
    for (int k = 1; k <= n; ++k)
      for (int q = 0; q <= k - 1; ++q)
        CHECK(rel_close(alpha_const(n, k, q, 0), omega(k - q) / omega(n - q), 1e-14));
  // q = k - r is outside the product form's domain
  CHECK_THROWS_AS(alpha_const(3, 2, 1, 1), std::domain_error);
  CHECK_THROWS_AS(alpha_const(5, 3, 2, 1), std::domain_error);
}

TEST_CASE("c0 constant") {
  CHECK(c0_const(3, 2, 0, 1, 0) == doctest::Approx(kPi).epsilon(1e-14));
  CHECK(c0_const(4, 3, 1, 1, 1) == doctest::Approx(3.0 * kPi).epsilon(1e-14));
  // q = j = 0, r = 0: c0 = omega_n / omega_k
  for (int n = 3; n <= 8; ++n)
    for (int k = 1; k < n; ++k)
      CHECK(rel_close(c0_const(n, k, 0, 0, 0), omega(n) / omega(k), 1e-13));
}

TEST_CASE("vertical-sections constant") {
  CHECK(d_const(3, 2, 1, 0, 0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(d_const(3, 2, 1, 1, 1) == doctest::Approx(kPi).epsilon(1e-13));
  // r = 0, q = k reduces to the classical Crofton constant
  for (int n = 3; n <= 10; ++n)
    for (int k = 1; k <= n; ++k)
      for (int j = 0; j <= k; ++j)
        CHECK(rel_close(d_const(n, k, 0, j, k), crofton_const(n - j, k, k - j, n), 1e-13));
  CHECK_THROWS_AS(d_const(3, 2, 1, 2, 1), std::domain_error);  // j > q
  CHECK_THROWS_AS(d_const(3, 2, 1, 0, 2), std::domain_error);  // q > k - r
  CHECK_THROWS_AS(d_const(3, 4, 1, 0, 0), std::domain_error);  // k > n
}

TEST_CASE("b-ratio reduction identity") {
  // (b_{k-r,q} / b_{n-r,q}) (b_{n,q} / b_{k,q})
  //   = alpha * omega_{n-r-q} / omega_{k-r-q}, admissible q < k - r
  for (int n = 3; n <= 10; ++n)
    for (int r = 0; r <= n - 1; ++r)
      for (int k = r + 1; k <= n; ++k)
        for (int q = 0; q <= k - r - 1; ++q) {
          double lhs = (b_coeff(k - r, q) / b_coeff(n - r, q)) * (b_coeff(n, q) / b_coeff(k, q));
          double rhs = alpha_const(n, k, q, r) * omega(n - r - q) / omega(k - r - q);
          CHECK(rel_close(lhs, rhs, 1e-12));
        }
}

TEST_CASE("vertical constant matches its reduced form away from the boundary") {
  for (int n = 3; n <= 8; ++n)
    for (int r = 0; r <= n - 1; ++r)
      for (int k = r + 1; k <= n; ++k)
        for (int j = 0; j <= k - r; ++j)
          for (int q = j; q < k - r; ++q) {
            double lhs = d_const(n, k, r, j, q);
            double rhs = c0_const(n, k, q, r, j) * omega(k - r - q) / omega(n - r - q);
            CHECK(rel_close(lhs, rhs, 1e-12));
          }
}

TEST_CASE("constants are positive and finite on admissible ranges") {
  for (int n = 1; n <= 25; ++n) {
    CHECK(kappa(n) > 0.0);
    CHECK(std::isfinite(kappa(n)));
    CHECK(omega(n) > 0.0);
    for (int q = 0; q <= n; ++q) {
      CHECK(b_coeff(n, q) > 0.0);
      CHECK(std::isfinite(b_coeff(n, q)));
    }
  }
  for (int n = 3; n <= 10; ++n)
    for (int r = 0; r <= n - 1; ++r)
      for (int k = r + 1; k <= n; ++k)
        for (int q = 0; q <= k - r - 1; ++q) {
          CHECK(alpha_const(n, k, q, r) > 0.0);
          CHECK(std::isfinite(alpha_const(n, k, q, r)));
        }
}
