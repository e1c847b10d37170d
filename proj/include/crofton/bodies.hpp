#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "crofton/errors.hpp"
#include "crofton/geometry.hpp"
#include "crofton/rng.hpp"

namespace crofton {

enum class BodyKind { Ball, Box, Polytope, Support };

// Immutable convex body: a ball, an axis-aligned box, a bounded H-polytope
// or a support/membership-oracle body. Queries are pure; the MC-backed
// section functionals take an explicit RngStream.
class ConvexBody {
 public:
  static ConvexBody ball(Vec center, double radius);
  static ConvexBody box(Vec lower, Vec upper);
  // {x : normals[i] . x <= offsets[i]}; must be bounded (checked by linear
  // programs in each +-coordinate direction) and nonempty
  static ConvexBody polytope(Mat normals, Vec offsets);
  static ConvexBody support_body(int ambient, std::function<double(const Vec&)> support,
                                 std::function<bool(const Vec&)> member,
                                 double circumradius_bound);

  int ambient() const { return ambient_; }
  BodyKind kind() const { return kind_; }

  // x in K, with 1e-10 slack on the defining constraints
  bool contains(const Vec& x) const;

  // support function h_K(u) (u need not be unit)
  double support(const Vec& u) const;

  // upper bound on sup { |x| : x in K }; exact for Ball and Box,
  // vertex max for Polytope, the stored bound for Support bodies
  double circumradius() const;

  // variant accessors (throw std::logic_error on kind mismatch)
  const Vec& center() const;
  double radius() const;
  const Vec& lower() const;
  const Vec& upper() const;
  const Mat& normals() const;
  const Vec& offsets() const;
  const std::vector<Vec>& vertices() const;  // Polytope only

 private:
  ConvexBody() = default;

  int ambient_ = 0;
  BodyKind kind_ = BodyKind::Ball;
  // ball
  Vec center_;
  double radius_ = 0.0;
  // box
  Vec lower_, upper_;
  // polytope
  Mat normals_;
  Vec poly_offsets_;
  std::vector<Vec> vertices_;
  // support body
  std::function<double(const Vec&)> h_;
  std::function<bool(const Vec&)> member_;
  double radius_bound_ = 0.0;

  friend ConvexBody make_ball_unchecked(Vec center, double radius);
  friend ConvexBody make_polytope_unchecked(int ambient, Mat normals, Vec offsets);
  friend ConvexBody make_support_unchecked(int ambient, std::function<double(const Vec&)> h,
                                           std::function<bool(const Vec&)> member,
                                           double bound);
};

// K cap E expressed in the orthonormal coordinates of the flat E. A ball
// sections to a ball, a box or polytope to a polytope, a support body to
// a support body with induced oracles (membership only).
struct SectionBody {
  Flat flat;
  ConvexBody body;  // ambient dimension = flat.dim()
  int dim() const { return flat.dim(); }
};

// Exact representation of K cap E in flat coordinates; std::nullopt when
// the intersection is empty. Emptiness is exact for Ball/Box/Polytope
// (distance test or feasibility LP); Support bodies are probed through
// the membership oracle, which is reliable only for full-dimensional K.
std::optional<SectionBody> section(const ConvexBody& K, const Flat& E);

bool section_nonempty(const ConvexBody& K, const Flat& E);

// closed-form intrinsic volume V_m for Ball and Box reference shapes;
// throws not_available for other variants
double exact_intrinsic_volume(const ConvexBody& K, int m);

// Intrinsic volume V_m of a section of dimension d, supported for
// m in {0, 1, d-1, d}:
//   m = 0    1 (sections are nonempty by construction)
//   m = d    volume: exact for Ball, vertex enumeration + facet fan for
//            Polytope (d <= 3), hit-or-miss MC for Support bodies
//   m = d-1  half the boundary measure: exact for Ball, facet sum for
//            Polytope
//   m = 1    mean-width MC over random line projections (d >= 3)
double section_intrinsic_volume(const SectionBody& S, int m, RngStream& rng);

// mean-width route for V_1 of a d-dimensional body (d >= 1):
// V_1 = d kappa_d / (2 kappa_{d-1}) * E_u[h(u) + h(-u)], u uniform on S^{d-1}
double v1_mean_width_mc(const ConvexBody& K, int samples, RngStream& rng);

// vertices of a bounded H-polytope by brute force over d-subsets of
// constraints (d <= 6), duplicates merged at 1e-8
std::vector<Vec> enumerate_polytope_vertices(const Mat& A, const Vec& b);

// volume / boundary measure of a bounded polytope, d <= 3
double polytope_volume(const Mat& A, const Vec& b);
double polytope_boundary_measure(const Mat& A, const Vec& b);

// largest t >= 0 with t * u in K, by bisection on the membership oracle
// (absolute tolerance 1e-10); requires o in K
double radial_distance(const ConvexBody& K, const Vec& u);

}  // namespace crofton
