#include "crofton/constants.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace crofton {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

// Gamma(twice/2) by upward recurrence from Gamma(1/2) = sqrt(pi) and
// Gamma(1) = 1; exact at half-integers up to rounding.
double gamma_half_integer(int twice) {
  if (twice < 1 || twice > 2 * kMaxDim + 2)
    throw std::domain_error("gamma_half_integer: argument out of range");
  double g = (twice % 2 == 1) ? std::sqrt(kPi) : 1.0;
  for (int t = (twice % 2 == 1) ? 1 : 2; t < twice; t += 2) g *= 0.5 * t;
  return g;
}

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::domain_error(msg);
}

}  // namespace

double kappa(int n) {
  require(n >= 0 && n <= kMaxDim, "kappa: need 0 <= n <= 64, got n=" + std::to_string(n));
  return std::pow(kPi, 0.5 * n) / gamma_half_integer(n + 2);
}

double omega(int n) {
  require(n >= 1 && n <= kMaxDim,
          n == 0 ? std::string("omega(0) undefined by convention")
                 : "omega: need 1 <= n <= 64, got n=" + std::to_string(n));
  return n * kappa(n);
}

double factorial(int m) {
  require(m >= 0 && m <= kMaxDim, "factorial: need 0 <= m <= 64");
  double f = 1.0;
  for (int i = 2; i <= m; ++i) f *= i;
  return f;
}

double binomial(int n, int m) {
  require(n >= 0 && m >= 0 && m <= n, "binomial: need 0 <= m <= n");
  return factorial(n) / (factorial(m) * factorial(n - m));
}

double b_coeff(int n, int q) {
  require(q >= 0, "b_coeff: need q >= 0");
  require(q <= n, "b_coeff: need q <= n, got n=" + std::to_string(n) +
                      ", q=" + std::to_string(q));
  double num = 1.0, den = 1.0;
  for (int i = n - q + 1; i <= n; ++i) num *= omega(i);
  for (int i = 1; i <= q; ++i) den *= omega(i);
  return num / den;
}

double crofton_const(int s1, int s2, int r1, int r2) {
  require(s1 >= 0 && s2 >= 0 && r1 >= 0 && r2 >= 0, "crofton_const: indices must be >= 0");
  return (factorial(r1) * kappa(r1) / (factorial(s1) * kappa(s1))) *
         (factorial(r2) * kappa(r2) / (factorial(s2) * kappa(s2)));
}

double alpha_const(int n, int k, int q, int r) {
  require(n >= 0 && k >= 0 && q >= 0 && r >= 0, "alpha_const: indices must be >= 0");
  require(k <= n, "alpha_const: need k <= n");
  require(q + r + 1 <= k,
          "alpha_const: need q + r + 1 <= k (q = k - r would touch omega(0)); got n=" +
              std::to_string(n) + ", k=" + std::to_string(k) + ", q=" + std::to_string(q) +
              ", r=" + std::to_string(r));
  double value = 1.0;
  for (int i = 0; i <= r; ++i) value *= omega(k - q - r + i) / omega(n - q - r + i);
  for (int i = 0; i < r; ++i) value *= omega(n - i) / omega(k - i);
  return value;
}

double c0_const(int n, int k, int q, int r, int j) {
  require(j >= 0 && j <= q, "c0_const: need 0 <= j <= q");
  return crofton_const(n - j, q, q - j, n) / alpha_const(n, k, q, r);
}

double d_const(int n, int k, int r, int j, int q) {
  require(n >= 0 && k >= 0 && r >= 0 && j >= 0 && q >= 0, "d_const: indices must be >= 0");
  require(r + 1 <= k && k <= n, "d_const: need r + 1 <= k <= n");
  require(j <= q && q <= k - r, "d_const: need j <= q <= k - r");
  return (b_coeff(n - r, q) / b_coeff(k - r, q)) * (b_coeff(k, q) / b_coeff(n, q)) *
         crofton_const(n - j, q, q - j, n);
}

}  // namespace crofton
