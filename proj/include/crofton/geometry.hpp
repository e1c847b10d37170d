#pragma once

#include <vector>

#include "crofton/errors.hpp"
#include "crofton/linalg.hpp"

namespace crofton {

// Orthonormality tolerance used throughout the geometric kernel.
inline constexpr double kOrthoTol = 1e-10;

// A k-dimensional linear subspace of R^n stored as an orthonormal frame
// (k may be 0, the trivial subspace {o}).
class Subspace {
 public:
  Subspace(int ambient, std::vector<Vec> frame);

  static Subspace trivial(int ambient);
  static Subspace full(int ambient);

  int ambient() const { return ambient_; }
  int dim() const { return static_cast<int>(frame_.size()); }
  const Vec& basis(int i) const { return frame_[static_cast<std::size_t>(i)]; }
  const std::vector<Vec>& frame() const { return frame_; }

  Vec project(const Vec& x) const;  // p(x | L)
  Vec reject(const Vec& x) const;   // x - p(x | L)
  Vec coords(const Vec& x) const;   // frame coordinates of p(x | L)
  Vec embed(const Vec& t) const;    // sum_i t_i f_i
  bool contains(const Vec& x, double tol = kOrthoTol) const;

 private:
  int ambient_;
  std::vector<Vec> frame_;
};

// An affine q-flat E = direction + offset with offset orthogonal to the
// direction space. The constructor removes any direction component from
// the offset, so d(o, E) = norm(offset()).
class Flat {
 public:
  Flat(Subspace direction, const Vec& offset);

  int ambient() const { return direction_.ambient(); }
  int dim() const { return direction_.dim(); }
  const Subspace& direction() const { return direction_; }
  const Vec& offset() const { return offset_; }

  Vec point_at(const Vec& coords) const;  // offset + direction.embed(coords)
  Vec project_point(const Vec& x) const;  // closest point of E to x

 private:
  Subspace direction_;
  Vec offset_;
};

// Gram-Schmidt with a re-orthogonalization pass. Throws degenerate_input
// when a vector's residual norm falls below kOrthoTol relative to its size.
Subspace orthonormalize(int ambient, const std::vector<Vec>& vectors);

// Orthonormal frame of the orthogonal complement of L, chosen
// deterministically from the canonical basis.
std::vector<Vec> complement_frame(const Subspace& L);

// span of the union of two subspaces; a's frame vectors come first and
// dependent directions of b are dropped
Subspace span_union(const Subspace& a, const Subspace& b);

// span(E): direction plus the offset direction when the offset is nonzero
Subspace flat_span(const Flat& E);

// volume of the parallelepiped spanned by xs, sqrt(det Gram)
double nabla(const std::vector<Vec>& xs);

// q-dimensional volume of conv{pts[0], ..., pts[q]}
double delta_simplex(const std::vector<Vec>& pts);

// Gram volume of xs stacked with an orthonormal frame of M
double nabla_mixed(const std::vector<Vec>& xs, const Subspace& M);

// generalized sine [L, M] in [0, 1]; equals 1 when either space is {o}
double subspace_det(const Subspace& L, const Subspace& M);

double dist_point_flat(const Vec& x, const Flat& E);
double dist_point_subspace(const Vec& x, const Subspace& L);

// inf distance between the flat E and the subspace L, the least-squares
// residual of E's offset against direction(E) + L
double dist_flat_subspace(const Flat& E, const Subspace& L);

// D(E, L0) = d(E, L0) * [direction(E), L0], the distance-angle weight of
// a flat against a fixed subspace (product form)
double d_weight(const Flat& E, const Subspace& L0);

// the same weight through its definition d(o, E) * [span E, L0]
double d_weight_via_span(const Flat& E, const Subspace& L0);

}  // namespace crofton
