#pragma once

#include "crofton/linalg.hpp"

namespace crofton {

enum class LpStatus { Optimal, Unbounded, Infeasible };

struct LpResult {
  LpStatus status;
  double value = 0.0;
  Vec x;
};

// maximize c . x subject to A x <= b, x free; dense two-phase simplex
// sized for desk-scale geometry (tens of constraints, dimension <= 16)
LpResult solve_lp(const Mat& A, const Vec& b, const Vec& c);

// is {x : A x <= b} nonempty?
bool lp_feasible(const Mat& A, const Vec& b);

}  // namespace crofton
