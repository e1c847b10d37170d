#pragma once

#include "crofton/bodies.hpp"
#include "crofton/estimate.hpp"
#include "crofton/geometry.hpp"
#include "crofton/rng.hpp"
#include "crofton/sampling.hpp"

namespace crofton {

// Which family of section designs an index tuple must satisfy.
enum class Design { Rotational, Vertical };

// Index tuple (n, k, r, j, q): ambient dimension n >= 3, section dimension
// k, fixed-subspace dimension r, defect j (the estimator targets V_{n-j}),
// and inner flat dimension q.
//   rotational: r+1 <= k <= n, 0 <= j <= k-(r+1), j <= q <= k-(r+1)
//   vertical:   r+1 <= k <= n, 0 <= j <= k-r,     j <= q <= k-r
struct Indices {
  int n = 0, k = 0, r = 0, j = 0, q = 0;
  void validate(Design design) const;  // throws std::domain_error
};

// One estimator run: indices, target body, fixed subspace L0 (dim r),
// nested sample budget and reference radius (0 = auto from circumradius).
struct EstimatorSpec {
  Indices idx;
  ConvexBody body;
  Subspace fixed_subspace;
  long long outer_samples = 100000;
  long long inner_samples = 64;
  double reference_radius = 0.0;
  std::uint64_t seed = 0;

  double effective_radius() const;
  void validate(Design design) const;
};

// Inner measurement on a section subspace L in G(L0, k): Monte Carlo of
//   c0 * integral over q-flats E of L of V_{q-j}(K cap E) * D(E, L0)^{n-k}
// against the invariant flat measure, realized by the hitting sampler.
// Averaged over L ~ nu_k^{L0} this is unbiased for V_{n-j}(K).
Estimate measurement_phi(const EstimatorSpec& spec, const Subspace& L, RngStream& rng);

// j = 0 specialization: (omega_{n-r} / omega_{k-r}) * integral over
// K cap L of d(x, L0)^{n-k}, sampled uniformly in a support box of K in L.
Estimate measurement_phi_volume(const EstimatorSpec& spec, const Subspace& L, RngStream& rng);

// q = j specialization: average over j-subspaces M of L of the weighted
// projection integral [M, L0]^{n-k} * integral over z in (K cap L)|M^perp
// of 1 * d(z, M + L0)^{n-k}.
Estimate measurement_phi_projection(const EstimatorSpec& spec, const Subspace& L,
                                    RngStream& rng);

// j = 0 radial form (requires o in K): spherical-coordinate rewrite of the
// volume route using the radial function of K cap L.
Estimate measurement_phi_radial(const EstimatorSpec& spec, const Subspace& L, RngStream& rng);

enum class PhiRoute { Generic, Volume, Projection, Radial };

Estimate measurement_by_route(const EstimatorSpec& spec, const Subspace& L, PhiRoute route,
                              RngStream& rng);

// Unbiased estimator of V_{n-j}(K) from sections with subspaces containing
// L0: outer MC over L ~ nu_k^{L0}, inner measurement along `route`.
// Deterministic for fixed seed, independent of the job count.
Estimate rotational_crofton_estimate(const EstimatorSpec& spec,
                                     PhiRoute route = PhiRoute::Generic, int jobs = 1);

// Inner measurement of the vertical design on the affine section L + x
// (x in L^perp): flats E inside L + x weighted by the angle factor
// [lin E, L0]^{n-k} only.
Estimate vertical_measurement_tilde(const EstimatorSpec& spec, const Subspace& L, const Vec& x,
                                    RngStream& rng);

// Unbiased estimator of V_{n-j}(K) from affine sections parallel to L0:
// outer MC over L ~ nu_k^{L0} and a translation x in the complement ball.
Estimate vertical_sections_estimate(const EstimatorSpec& spec, int jobs = 1);

}  // namespace crofton
