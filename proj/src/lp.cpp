#include "crofton/lp.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace crofton {

namespace {

constexpr double kEps = 1e-9;

// Standard-form tableau: free x is split as u - v, slacks make rows
// equalities, artificials cover rows whose slack cannot start basic.
struct Tableau {
  int m, nvar;                 // rows, structural columns (2n + m slacks)
  int nart = 0;                // artificial columns, appended after nvar
  std::vector<Vec> rows;       // m rows of length nvar + nart
  Vec rhs;                     // length m, kept nonnegative
  std::vector<int> basis;      // basic column per row

  int cols() const { return nvar + nart; }

  // one simplex phase on the cost vector (maximization); returns false on
  // unboundedness. Bland's rule keeps it from cycling.
  bool iterate(Vec cost, double& value, const std::vector<bool>& banned) {
    const int iter_cap = 20000;
    for (int iter = 0; iter < iter_cap; ++iter) {
      // reduced costs: z_j - c_j with z from the current basis
      Vec y(m);  // multipliers lambda such that lambda_i = cost of basis row i
      for (int i = 0; i < m; ++i) y[i] = cost[basis[i]];
      int enter = -1;
      for (int j = 0; j < cols(); ++j) {
        if (banned[j]) continue;
        double red = cost[j];
        for (int i = 0; i < m; ++i) red -= y[i] * rows[i][j];
        if (red > kEps) {
          enter = j;
          break;  // Bland: first improving column
        }
      }
      if (enter < 0) {
        value = 0.0;
        for (int i = 0; i < m; ++i) value += cost[basis[i]] * rhs[i];
        return true;
      }
      int leave = -1;
      double best = std::numeric_limits<double>::infinity();
      for (int i = 0; i < m; ++i) {
        if (rows[i][enter] > kEps) {
          double ratio = rhs[i] / rows[i][enter];
          if (ratio < best - kEps || (ratio < best + kEps && (leave < 0 || basis[i] < basis[leave]))) {
            best = ratio;
            leave = i;
          }
        }
      }
      if (leave < 0) return false;  // unbounded
      pivot(leave, enter);
    }
    throw std::runtime_error("simplex: iteration cap exceeded");
  }

  void pivot(int r, int c) {
    double p = rows[r][c];
    for (double& v : rows[r]) v /= p;
    rhs[r] /= p;
    for (int i = 0; i < m; ++i) {
      if (i == r) continue;
      double f = rows[i][c];
      if (f == 0.0) continue;
      for (int j = 0; j < cols(); ++j) rows[i][j] -= f * rows[r][j];
      rhs[i] -= f * rhs[r];
    }
    basis[r] = c;
  }
};

}  // namespace

LpResult solve_lp(const Mat& A, const Vec& b, const Vec& c) {
  const int m = static_cast<int>(A.size());
  const int n = m > 0 ? static_cast<int>(A[0].size()) : static_cast<int>(c.size());

  Tableau t;
  t.m = m;
  t.nvar = 2 * n + m;
  t.rows.assign(m, {});
  t.rhs.assign(m, 0.0);
  t.basis.assign(m, -1);

  std::vector<int> art_row;  // row index of each artificial
  for (int i = 0; i < m; ++i) {
    double sign = (b[i] < 0.0) ? -1.0 : 1.0;
    Vec row(t.nvar, 0.0);
    for (int j = 0; j < n; ++j) {
      row[j] = sign * A[i][j];
      row[n + j] = -sign * A[i][j];
    }
    row[2 * n + i] = sign;  // slack
    t.rows[i] = std::move(row);
    t.rhs[i] = sign * b[i];
    if (sign > 0.0) {
      t.basis[i] = 2 * n + i;
    } else {
      art_row.push_back(i);
    }
  }
  t.nart = static_cast<int>(art_row.size());
  for (int i = 0; i < m; ++i) t.rows[i].resize(t.cols(), 0.0);
  for (int a = 0; a < t.nart; ++a) {
    t.rows[art_row[a]][t.nvar + a] = 1.0;
    t.basis[art_row[a]] = t.nvar + a;
  }

  std::vector<bool> banned(t.cols(), false);

  if (t.nart > 0) {
    // phase 1: maximize -(sum of artificials)
    Vec cost(t.cols(), 0.0);
    for (int a = 0; a < t.nart; ++a) cost[t.nvar + a] = -1.0;
    double value = 0.0;
    if (!t.iterate(cost, value, banned))
      throw std::runtime_error("simplex: phase 1 unbounded");
    if (value < -1e-7) return {LpStatus::Infeasible, 0.0, {}};
    for (int a = 0; a < t.nart; ++a) banned[t.nvar + a] = true;
    // pivot any artificial still basic (at zero) out if possible
    for (int i = 0; i < m; ++i) {
      if (t.basis[i] >= t.nvar) {
        for (int j = 0; j < t.nvar; ++j) {
          if (std::fabs(t.rows[i][j]) > kEps) {
            t.pivot(i, j);
            break;
          }
        }
      }
    }
  }

  // phase 2
  Vec cost(t.cols(), 0.0);
  for (int j = 0; j < n; ++j) {
    cost[j] = c[j];
    cost[n + j] = -c[j];
  }
  double value = 0.0;
  if (!t.iterate(cost, value, banned)) return {LpStatus::Unbounded, 0.0, {}};

  Vec x(n, 0.0);
  for (int i = 0; i < m; ++i) {
    int bcol = t.basis[i];
    if (bcol < n)
      x[bcol] += t.rhs[i];
    else if (bcol < 2 * n)
      x[bcol - n] -= t.rhs[i];
  }
  return {LpStatus::Optimal, value, std::move(x)};
}

bool lp_feasible(const Mat& A, const Vec& b) {
  int n = A.empty() ? 0 : static_cast<int>(A[0].size());
  LpResult r = solve_lp(A, b, Vec(n, 0.0));
  return r.status == LpStatus::Optimal;
}

}  // namespace crofton
