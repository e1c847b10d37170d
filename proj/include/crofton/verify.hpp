#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "crofton/bodies.hpp"
#include "crofton/estimators.hpp"

namespace crofton {

// Outcome of one numerical identity check. Statistical checks compare two
// MC routes at four combined standard errors; deterministic checks use the
// stated absolute/relative tolerances. `passed` is a pure function of the
// recorded values and the tolerance rule.
struct CheckReport {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double lhs_se = 0.0;
  double rhs_se = 0.0;
  std::string tolerance_rule;
  bool passed = false;
  std::string details;
};

// classical Crofton identity: the invariant q-flat integral of
// V_{q-j}(K cap E) against an exact multiple of V_{n-j}(K)
CheckReport check_classical_crofton(int n, int q, int j, const ConvexBody& body,
                                    long long budget, std::uint64_t seed);

// linear Blaschke-Petkantschin identity with a fixed subspace: two MC
// routes to the same flat integral of a smooth ball-supported integrand
CheckReport check_bp_linear(int n, int q, int r, int k, std::uint64_t seed, long long budget);

// affine variant with the parallel-flat (angle-only) weight
CheckReport check_bp_affine(int n, int q, int r, int k, std::uint64_t seed, long long budget);

// independence of the rotational measurement function from q: compares
// consecutive q values on the same sampled section subspaces
CheckReport check_uniqueness_q(int n, int k, int r, int j, const ConvexBody& body,
                               int subspace_draws, long long budget, std::uint64_t seed);

// same for the vertical measurement function at fixed (L, x)
CheckReport check_uniqueness_q_affine(int n, int k, int r, int j, const ConvexBody& body,
                                      int subspace_draws, long long budget,
                                      std::uint64_t seed);

// agreement of the three evaluation routes for the distance-angle weight
// D(E, L0) on random configurations
CheckReport check_lemma_D(int n, int q, int r, int trials, std::uint64_t seed);

// cylindrical decomposition of the sphere measure and the projection
// moment integral, bundled as one report
CheckReport check_sphere_identities(int n, std::uint64_t seed, long long budget);

// constructive no-go demonstration: two bodies with identical sections
// through almost every L in G(L0, k) but different V_m, so no section
// functional can recover V_m for m <= r + 1
CheckReport impossibility_demo(int n, int k, int r, int m, std::uint64_t seed,
                               long long budget);

// the full default battery at the given budget scale, run concurrently
std::vector<CheckReport> default_battery(std::uint64_t seed, long long budget, int jobs);

// subset selection by name ("all" or empty set = everything)
std::vector<CheckReport> run_battery(const std::vector<std::string>& names,
                                     std::uint64_t seed, long long budget, int jobs);

std::vector<std::string> battery_check_names();

}  // namespace crofton
