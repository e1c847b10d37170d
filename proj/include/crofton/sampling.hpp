#pragma once

#include "crofton/geometry.hpp"
#include "crofton/rng.hpp"

namespace crofton {

Vec gaussian_vec(int n, RngStream& rng);

// uniform point on S^{d-1} (d >= 1)
Vec uniform_on_sphere(int d, RngStream& rng);

// uniform point in the radius-R ball of R^d; d = 0 gives the empty tuple
Vec uniform_in_ball(int d, double R, RngStream& rng);

// invariant (Haar) draw from the Grassmannian G(n, k), realized by
// orthonormalizing k independent standard-normal vectors
Subspace sample_grassmannian(int n, int k, RngStream& rng);

// invariant draw from G(L0, k), the k-subspaces containing L0: the draw
// is L0 extended by a Haar (k - r)-subspace of the orthogonal complement
Subspace sample_grassmannian_containing(const Subspace& L0, int k, RngStream& rng);

// Haar-random orthogonal map that is the identity on L0 and rotates (or
// reflects) its orthogonal complement; returned as a dense n x n matrix
Mat sample_rotation_fixing(const Subspace& L0, RngStream& rng);

struct HitFlat {
  Flat flat;
  double weight;
};

// Draws a q-flat of the subspace L (dim k) under the invariant flat
// measure restricted to flats meeting the radius-R ball about the origin:
// direction uniform in G(L, q), offset uniform in the radius-R ball of
// its complement within L. The importance weight kappa_{k-q} R^{k-q}
// makes weight * f(E) unbiased for the invariant integral of any f
// supported on flats meeting the ball.
HitFlat sample_hitting_flat(const Subspace& L, int q, double R, RngStream& rng);

struct BallTranslate {
  Vec offset;
  double weight;
};

// uniform offset in the radius-R ball of the orthogonal complement of L,
// with weight kappa_{n-k} R^{n-k}; requires dim L < n
BallTranslate sample_translate_in_complement(const Subspace& L, double R, RngStream& rng);

}  // namespace crofton
