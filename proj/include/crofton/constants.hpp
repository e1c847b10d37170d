#pragma once

namespace crofton {

// Dimensional constants of integral geometry. All functions are pure,
// computed in double precision, and throw std::domain_error outside
// their admissible index ranges. Dimensions are capped at kMaxDim to
// keep factorial/Gamma products finite.
inline constexpr int kMaxDim = 64;

// volume of the unit ball in R^n; kappa(0) = 1
double kappa(int n);

// surface area of the unit sphere in R^n, n * kappa(n); omega(0) is an error
double omega(int n);

// m! as a double, m <= kMaxDim
double factorial(int m);

// binomial coefficient C(n, m)
double binomial(int n, int m);

// omega_{n-q+1} * ... * omega_n / (omega_1 * ... * omega_q); b_coeff(n, 0) = 1
double b_coeff(int n, int q);

// (r1! kappa_{r1} / s1! kappa_{s1}) * (r2! kappa_{r2} / s2! kappa_{s2}),
// the classical Crofton constant with upper indices (r1, r2) and lower
// indices (s1, s2)
double crofton_const(int s1, int s2, int r1, int r2);

// leading constant of the fixed-subspace Blaschke-Petkantschin identity:
//   (omega_{k-q-r} ... omega_{k-q}) / (omega_{n-q-r} ... omega_{n-q})
//     * prod_{i=0}^{r-1} omega_{n-i} / omega_{k-i}
// Requires q + r + 1 <= k <= n so that no factor touches omega(0).
double alpha_const(int n, int k, int q, int r);

// measurement-function constant alpha^{-1} * c^{q-j,n}_{n-j,q}
double c0_const(int n, int k, int q, int r, int j);

// vertical-sections constant, evaluated through b-ratios so that the
// boundary case q = k - r never touches omega(0):
//   (b_{n-r,q} / b_{k-r,q}) * (b_{k,q} / b_{n,q}) * c^{q-j,n}_{n-j,q}
double d_const(int n, int k, int r, int j, int q);

}  // namespace crofton
