#pragma once

#include <cassert>
#include <cmath>
#include <cstddef>
#include <vector>

namespace crofton {

// Dense vectors/matrices at desk scale (n <= 16). Matrices are row-major
// lists of rows.
using Vec = std::vector<double>;
using Mat = std::vector<Vec>;

inline double dot(const Vec& a, const Vec& b) {
  assert(a.size() == b.size());
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline double norm2(const Vec& a) { return dot(a, a); }
inline double norm(const Vec& a) { return std::sqrt(norm2(a)); }

inline Vec zeros(int n) { return Vec(static_cast<std::size_t>(n), 0.0); }

inline Vec basis_vec(int n, int i) {
  Vec e = zeros(n);
  e[static_cast<std::size_t>(i)] = 1.0;
  return e;
}

inline Vec add(const Vec& a, const Vec& b) {
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

inline Vec sub(const Vec& a, const Vec& b) {
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

inline Vec scaled(const Vec& a, double s) {
  Vec r = a;
  for (double& c : r) c *= s;
  return r;
}

// y += s * x
inline void axpy(double s, const Vec& x, Vec& y) {
  assert(x.size() == y.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += s * x[i];
}

inline Vec mat_apply(const Mat& A, const Vec& x) {
  Vec y(A.size());
  for (std::size_t i = 0; i < A.size(); ++i) y[i] = dot(A[i], x);
  return y;
}

// Solves A x = b in place by Gaussian elimination with partial pivoting.
// Returns false when the pivot falls below tol (treated as singular).
inline bool solve_linear(Mat A, Vec b, Vec& x, double tol = 1e-12) {
  const std::size_t d = A.size();
  for (std::size_t col = 0; col < d; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < d; ++r)
      if (std::fabs(A[r][col]) > std::fabs(A[piv][col])) piv = r;
    if (std::fabs(A[piv][col]) < tol) return false;
    std::swap(A[piv], A[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = col + 1; r < d; ++r) {
      double f = A[r][col] / A[col][col];
      for (std::size_t c = col; c < d; ++c) A[r][c] -= f * A[col][c];
      b[r] -= f * b[col];
    }
  }
  x.assign(d, 0.0);
  for (std::size_t i = d; i-- > 0;) {
    double s = b[i];
    for (std::size_t c = i + 1; c < d; ++c) s -= A[i][c] * x[c];
    x[i] = s / A[i][i];
  }
  return true;
}

}  // namespace crofton
