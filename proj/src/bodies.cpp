#include "crofton/bodies.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "crofton/constants.hpp"
#include "crofton/lp.hpp"
#include "crofton/sampling.hpp"

namespace crofton {

namespace {

constexpr double kSlack = 1e-10;

void box_constraints(const Vec& lower, const Vec& upper, Mat& A, Vec& b) {
  const int n = static_cast<int>(lower.size());
  for (int i = 0; i < n; ++i) {
    Vec row = zeros(n);
    row[i] = 1.0;
    A.push_back(row);
    b.push_back(upper[i]);
    row[i] = -1.0;
    A.push_back(row);
    b.push_back(-lower[i]);
  }
}

// next d-combination of {0..m-1} in lexicographic order
bool next_combination(std::vector<int>& idx, int m) {
  const int d = static_cast<int>(idx.size());
  for (int i = d - 1; i >= 0; --i) {
    if (idx[i] < m - (d - i)) {
      ++idx[i];
      for (int j = i + 1; j < d; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

bool satisfies_all(const Mat& A, const Vec& b, const Vec& x, double tol) {
  for (std::size_t i = 0; i < A.size(); ++i)
    if (dot(A[i], x) > b[i] + tol * (1.0 + std::fabs(b[i]) + norm(A[i]))) return false;
  return true;
}

// vertices of a 2-polytope sorted by angle around their centroid
std::vector<Vec> ordered_polygon(std::vector<Vec> verts) {
  Vec c = zeros(2);
  for (const Vec& v : verts) axpy(1.0 / verts.size(), v, c);
  std::sort(verts.begin(), verts.end(), [&c](const Vec& a, const Vec& b) {
    return std::atan2(a[1] - c[1], a[0] - c[0]) < std::atan2(b[1] - c[1], b[0] - c[0]);
  });
  return verts;
}

double polygon_area(const std::vector<Vec>& poly) {
  double s = 0.0;
  const std::size_t p = poly.size();
  for (std::size_t i = 0; i < p; ++i) {
    const Vec& a = poly[i];
    const Vec& b = poly[(i + 1) % p];
    s += a[0] * b[1] - b[0] * a[1];
  }
  return 0.5 * std::fabs(s);
}

double polygon_perimeter(const std::vector<Vec>& poly) {
  double s = 0.0;
  const std::size_t p = poly.size();
  for (std::size_t i = 0; i < p; ++i) s += norm(sub(poly[(i + 1) % p], poly[i]));
  return s;
}

// vertices incident to facet i, projected to 2d coordinates in the facet
// plane and ordered by angle
std::vector<Vec> facet_polygon(const Mat& A, const Vec& b, const std::vector<Vec>& verts, int i) {
  std::vector<Vec> on;
  for (const Vec& v : verts)
    if (std::fabs(dot(A[i], v) - b[i]) <= 1e-8 * (1.0 + std::fabs(b[i]) + norm(A[i])))
      on.push_back(v);
  if (on.size() < 3) return {};
  Subspace normal_line = orthonormalize(3, {A[i]});
  std::vector<Vec> plane = complement_frame(normal_line);
  std::vector<Vec> flat2;
  flat2.reserve(on.size());
  for (const Vec& v : on) flat2.push_back(Vec{dot(v, plane[0]), dot(v, plane[1])});
  return ordered_polygon(std::move(flat2));
}

}  // namespace

ConvexBody make_ball_unchecked(Vec center, double radius) {
  ConvexBody k;
  k.ambient_ = static_cast<int>(center.size());
  k.kind_ = BodyKind::Ball;
  k.center_ = std::move(center);
  k.radius_ = radius;
  return k;
}

ConvexBody make_polytope_unchecked(int ambient, Mat normals, Vec offsets) {
  ConvexBody k;
  k.ambient_ = ambient;
  k.kind_ = BodyKind::Polytope;
  k.normals_ = std::move(normals);
  k.poly_offsets_ = std::move(offsets);
  return k;
}

ConvexBody make_support_unchecked(int ambient, std::function<double(const Vec&)> h,
                                  std::function<bool(const Vec&)> member, double bound) {
  ConvexBody k;
  k.ambient_ = ambient;
  k.kind_ = BodyKind::Support;
  k.h_ = std::move(h);
  k.member_ = std::move(member);
  k.radius_bound_ = bound;
  return k;
}

ConvexBody ConvexBody::ball(Vec center, double radius) {
  if (radius <= 0.0) throw std::invalid_argument("ball: need radius > 0");
  return make_ball_unchecked(std::move(center), radius);
}

ConvexBody ConvexBody::box(Vec lower, Vec upper) {
  if (lower.size() != upper.size()) throw std::invalid_argument("box: bound lengths differ");
  for (std::size_t i = 0; i < lower.size(); ++i)
    if (lower[i] > upper[i]) throw std::invalid_argument("box: need lower <= upper componentwise");
  ConvexBody k;
  k.ambient_ = static_cast<int>(lower.size());
  k.kind_ = BodyKind::Box;
  k.lower_ = std::move(lower);
  k.upper_ = std::move(upper);
  return k;
}

ConvexBody ConvexBody::polytope(Mat normals, Vec offsets) {
  if (normals.empty() || normals.size() != offsets.size())
    throw std::invalid_argument("polytope: need matching normals and offsets");
  const int n = static_cast<int>(normals[0].size());
  if (!lp_feasible(normals, offsets)) throw std::invalid_argument("polytope: empty");
  for (int i = 0; i < n; ++i) {
    for (double sign : {1.0, -1.0}) {
      Vec c = zeros(n);
      c[i] = sign;
      if (solve_lp(normals, offsets, c).status == LpStatus::Unbounded)
        throw std::invalid_argument("polytope: unbounded in a coordinate direction");
    }
  }
  ConvexBody k = make_polytope_unchecked(n, std::move(normals), std::move(offsets));
  k.vertices_ = enumerate_polytope_vertices(k.normals_, k.poly_offsets_);
  return k;
}

ConvexBody ConvexBody::support_body(int ambient, std::function<double(const Vec&)> support,
                                    std::function<bool(const Vec&)> member,
                                    double circumradius_bound) {
  if (circumradius_bound <= 0.0)
    throw std::invalid_argument("support_body: need a positive circumradius bound");
  // sublinearity spot checks on deterministic probe pairs
  RngStream probe(0x5ec7109db0d1e5ULL);
  for (int t = 0; t < 32; ++t) {
    Vec u(ambient), v(ambient);
    for (double& c : u) c = probe.next_gaussian();
    for (double& c : v) c = probe.next_gaussian();
    double hu = support(u), hv = support(v), huv = support(add(u, v));
    if (hu + hv < huv - 1e-8 * (1.0 + std::fabs(huv)))
      throw std::invalid_argument("support_body: support oracle fails sublinearity probe");
  }
  return make_support_unchecked(ambient, std::move(support), std::move(member),
                                circumradius_bound);
}

bool ConvexBody::contains(const Vec& x) const {
  switch (kind_) {
    case BodyKind::Ball:
      return norm(sub(x, center_)) <= radius_ + kSlack;
    case BodyKind::Box:
      for (std::size_t i = 0; i < lower_.size(); ++i)
        if (x[i] < lower_[i] - kSlack || x[i] > upper_[i] + kSlack) return false;
      return true;
    case BodyKind::Polytope:
      return satisfies_all(normals_, poly_offsets_, x, kSlack);
    case BodyKind::Support:
      return member_(x);
  }
  return false;
}

double ConvexBody::support(const Vec& u) const {
  switch (kind_) {
    case BodyKind::Ball:
      return dot(center_, u) + radius_ * norm(u);
    case BodyKind::Box: {
      double s = 0.0;
      for (std::size_t i = 0; i < lower_.size(); ++i)
        s += std::max(lower_[i] * u[i], upper_[i] * u[i]);
      return s;
    }
    case BodyKind::Polytope: {
      double best = -std::numeric_limits<double>::infinity();
      for (const Vec& v : vertices_) best = std::max(best, dot(v, u));
      return best;
    }
    case BodyKind::Support:
      return h_(u);
  }
  return 0.0;
}

double ConvexBody::circumradius() const {
  switch (kind_) {
    case BodyKind::Ball:
      return norm(center_) + radius_;
    case BodyKind::Box: {
      double s = 0.0;
      for (std::size_t i = 0; i < lower_.size(); ++i) {
        double m = std::max(std::fabs(lower_[i]), std::fabs(upper_[i]));
        s += m * m;
      }
      return std::sqrt(s);
    }
    case BodyKind::Polytope: {
      double best = 0.0;
      for (const Vec& v : vertices_) best = std::max(best, norm(v));
      return best;
    }
    case BodyKind::Support:
      return radius_bound_;
  }
  return 0.0;
}

const Vec& ConvexBody::center() const {
  if (kind_ != BodyKind::Ball) throw std::logic_error("center: not a ball");
  return center_;
}
double ConvexBody::radius() const {
  if (kind_ != BodyKind::Ball) throw std::logic_error("radius: not a ball");
  return radius_;
}
const Vec& ConvexBody::lower() const {
  if (kind_ != BodyKind::Box) throw std::logic_error("lower: not a box");
  return lower_;
}
const Vec& ConvexBody::upper() const {
  if (kind_ != BodyKind::Box) throw std::logic_error("upper: not a box");
  return upper_;
}
const Mat& ConvexBody::normals() const {
  if (kind_ != BodyKind::Polytope) throw std::logic_error("normals: not a polytope");
  return normals_;
}
const Vec& ConvexBody::offsets() const {
  if (kind_ != BodyKind::Polytope) throw std::logic_error("offsets: not a polytope");
  return poly_offsets_;
}
const std::vector<Vec>& ConvexBody::vertices() const {
  if (kind_ != BodyKind::Polytope) throw std::logic_error("vertices: not a polytope");
  return vertices_;
}

std::vector<Vec> enumerate_polytope_vertices(const Mat& A, const Vec& b) {
  const int m = static_cast<int>(A.size());
  const int d = static_cast<int>(A[0].size());
  if (d > 6) throw not_available("enumerate_polytope_vertices: dimension > 6");
  std::vector<Vec> verts;
  if (m < d) return verts;
  std::vector<int> idx(d);
  for (int i = 0; i < d; ++i) idx[i] = i;
  do {
    Mat sys;
    Vec rhs;
    for (int i : idx) {
      sys.push_back(A[i]);
      rhs.push_back(b[i]);
    }
    Vec x;
    if (!solve_linear(sys, rhs, x, 1e-10)) continue;
    if (!satisfies_all(A, b, x, 1e-9)) continue;
    bool dup = false;
    for (const Vec& v : verts)
      if (norm(sub(v, x)) < 1e-8) {
        dup = true;
        break;
      }
    if (!dup) verts.push_back(std::move(x));
  } while (next_combination(idx, m));
  return verts;
}

double polytope_volume(const Mat& A, const Vec& b) {
  const int d = static_cast<int>(A[0].size());
  std::vector<Vec> verts = enumerate_polytope_vertices(A, b);
  if (d == 1) {
    if (verts.size() < 2) return 0.0;
    double lo = verts[0][0], hi = verts[0][0];
    for (const Vec& v : verts) {
      lo = std::min(lo, v[0]);
      hi = std::max(hi, v[0]);
    }
    return hi - lo;
  }
  if (d == 2) {
    if (verts.size() < 3) return 0.0;
    return polygon_area(ordered_polygon(std::move(verts)));
  }
  if (d == 3) {
    if (verts.size() < 4) return 0.0;
    Vec c = zeros(3);
    for (const Vec& v : verts) axpy(1.0 / verts.size(), v, c);
    double vol = 0.0;
    for (std::size_t i = 0; i < A.size(); ++i) {
      std::vector<Vec> poly = facet_polygon(A, b, verts, static_cast<int>(i));
      if (poly.size() < 3) continue;
      double area = polygon_area(poly);
      double height = std::fabs(dot(A[i], c) - b[i]) / norm(A[i]);
      vol += area * height / 3.0;
    }
    return vol;
  }
  throw not_available("polytope_volume: dimension > 3");
}

double polytope_boundary_measure(const Mat& A, const Vec& b) {
  const int d = static_cast<int>(A[0].size());
  std::vector<Vec> verts = enumerate_polytope_vertices(A, b);
  if (d == 1) return verts.size() >= 2 ? 2.0 : (verts.empty() ? 0.0 : 1.0);
  if (d == 2) {
    if (verts.size() < 3) return 0.0;
    return polygon_perimeter(ordered_polygon(std::move(verts)));
  }
  if (d == 3) {
    double area = 0.0;
    for (std::size_t i = 0; i < A.size(); ++i) {
      std::vector<Vec> poly = facet_polygon(A, b, verts, static_cast<int>(i));
      if (poly.size() >= 3) area += polygon_area(poly);
    }
    return area;
  }
  throw not_available("polytope_boundary_measure: dimension > 3");
}

namespace {

// reduced constraints of {x : A x <= b} on the flat E: (F^T a) . t <= b - a . z.
// Returns false when a constraint parallel to E is violated (empty section).
bool reduce_constraints(const Mat& A, const Vec& b, const Flat& E, Mat& Ar, Vec& br) {
  const int d = E.dim();
  for (std::size_t i = 0; i < A.size(); ++i) {
    Vec row(d);
    double mx = 0.0;
    for (int j = 0; j < d; ++j) {
      row[j] = dot(A[i], E.direction().basis(j));
      mx = std::max(mx, std::fabs(row[j]));
    }
    double rhs = b[i] - dot(A[i], E.offset());
    if (mx < 1e-12 * (1.0 + norm(A[i]))) {
      if (rhs < -1e-9 * (1.0 + std::fabs(b[i]))) return false;
      continue;  // constraint holds on all of E
    }
    Ar.push_back(std::move(row));
    br.push_back(rhs);
  }
  return true;
}

bool reduced_feasible(const Mat& Ar, const Vec& br, int d) {
  if (Ar.empty()) return true;
  if (d == 1) {
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < Ar.size(); ++i) {
      double a = Ar[i][0];
      if (a > 0.0)
        hi = std::min(hi, br[i] / a);
      else
        lo = std::max(lo, br[i] / a);
    }
    return lo <= hi + 1e-9;
  }
  return lp_feasible(Ar, br);
}

std::optional<SectionBody> section_of_constraints(const Mat& A, const Vec& b, const Flat& E) {
  Mat Ar;
  Vec br;
  if (!reduce_constraints(A, b, E, Ar, br)) return std::nullopt;
  const int d = E.dim();
  if (d == 0) {
    if (!satisfies_all(A, b, E.offset(), kSlack)) return std::nullopt;
    return SectionBody{E, make_ball_unchecked({}, 0.0)};
  }
  if (!reduced_feasible(Ar, br, d)) return std::nullopt;
  return SectionBody{E, make_polytope_unchecked(d, std::move(Ar), std::move(br))};
}

}  // namespace

std::optional<SectionBody> section(const ConvexBody& K, const Flat& E) {
  const int d = E.dim();
  switch (K.kind()) {
    case BodyKind::Ball: {
      Vec foot = E.project_point(K.center());
      double dist = norm(sub(K.center(), foot));
      if (dist > K.radius() + kSlack) return std::nullopt;
      if (d == 0) return SectionBody{E, make_ball_unchecked({}, 0.0)};
      Vec tc = E.direction().coords(sub(K.center(), E.offset()));
      double r2 = K.radius() * K.radius() - dist * dist;
      return SectionBody{E, make_ball_unchecked(std::move(tc), std::sqrt(std::max(0.0, r2)))};
    }
    case BodyKind::Box: {
      Mat A;
      Vec b;
      box_constraints(K.lower(), K.upper(), A, b);
      return section_of_constraints(A, b, E);
    }
    case BodyKind::Polytope:
      return section_of_constraints(K.normals(), K.offsets(), E);
    case BodyKind::Support: {
      if (d == 0) {
        if (!K.contains(E.offset())) return std::nullopt;
        return SectionBody{E, make_ball_unchecked({}, 0.0)};
      }
      double b2 = K.circumradius() * K.circumradius() - norm2(E.offset());
      if (b2 < 0.0) return std::nullopt;
      double bound = std::sqrt(b2);
      Flat flat = E;
      auto member = [K, flat](const Vec& t) { return K.contains(flat.point_at(t)); };
      // emptiness by oracle probing; exact only for full-dimensional K
      bool hit = member(zeros(d));
      RngStream probe(0x9d0be5ec71ULL);
      for (int t = 0; t < 512 && !hit; ++t) {
        Vec u(d);
        for (double& c : u) c = bound * (2.0 * probe.next_double() - 1.0);
        hit = member(u);
      }
      if (!hit) return std::nullopt;
      return SectionBody{E, make_support_unchecked(d, nullptr, std::move(member), bound)};
    }
  }
  return std::nullopt;
}

bool section_nonempty(const ConvexBody& K, const Flat& E) {
  switch (K.kind()) {
    case BodyKind::Ball:
      return dist_point_flat(K.center(), E) <= K.radius() + kSlack;
    case BodyKind::Box: {
      Mat A;
      Vec b;
      box_constraints(K.lower(), K.upper(), A, b);
      Mat Ar;
      Vec br;
      if (!reduce_constraints(A, b, E, Ar, br)) return false;
      if (E.dim() == 0) return K.contains(E.offset());
      return reduced_feasible(Ar, br, E.dim());
    }
    case BodyKind::Polytope: {
      Mat Ar;
      Vec br;
      if (!reduce_constraints(K.normals(), K.offsets(), E, Ar, br)) return false;
      if (E.dim() == 0) return K.contains(E.offset());
      return reduced_feasible(Ar, br, E.dim());
    }
    case BodyKind::Support:
      return section(K, E).has_value();
  }
  return false;
}

double exact_intrinsic_volume(const ConvexBody& K, int m) {
  const int n = K.ambient();
  if (m < 0 || m > n) throw std::domain_error("exact_intrinsic_volume: need 0 <= m <= n");
  switch (K.kind()) {
    case BodyKind::Ball:
      return binomial(n, m) * kappa(n) / kappa(n - m) * std::pow(K.radius(), m);
    case BodyKind::Box: {
      // elementary symmetric polynomial of the side lengths
      Vec e(m + 1, 0.0);
      e[0] = 1.0;
      for (int i = 0; i < n; ++i) {
        double s = K.upper()[i] - K.lower()[i];
        for (int j = std::min(m, i + 1); j >= 1; --j) e[j] += s * e[j - 1];
      }
      return e[m];
    }
    default:
      throw not_available("exact_intrinsic_volume: closed form only for Ball and Box");
  }
}

double v1_mean_width_mc(const ConvexBody& K, int samples, RngStream& rng) {
  const int d = K.ambient();
  if (d < 1) throw std::domain_error("v1_mean_width_mc: need dimension >= 1");
  double acc = 0.0;
  for (int t = 0; t < samples; ++t) {
    Vec u = uniform_on_sphere(d, rng);
    acc += K.support(u) + K.support(scaled(u, -1.0));
  }
  double mean_width = acc / samples;
  return d * kappa(d) / (2.0 * kappa(d - 1)) * mean_width;
}

double section_intrinsic_volume(const SectionBody& S, int m, RngStream& rng) {
  const int d = S.dim();
  if (m < 0 || m > std::max(d, 0))
    throw not_available("section_intrinsic_volume: m out of range");
  if (m == 0) return 1.0;  // sections are nonempty by construction
  const ConvexBody& B = S.body;
  if (m == d) {
    switch (B.kind()) {
      case BodyKind::Ball:
        return kappa(d) * std::pow(B.radius(), d);
      case BodyKind::Polytope:
        return polytope_volume(B.normals(), B.offsets());
      case BodyKind::Support: {
        // hit-or-miss MC in the bounding box of the section
        const int n_pts = 4096;
        double half = B.circumradius();
        double boxvol = std::pow(2.0 * half, d);
        int hits = 0;
        for (int t = 0; t < n_pts; ++t) {
          Vec x(d);
          for (double& c : x) c = half * (2.0 * rng.next_double() - 1.0);
          if (B.contains(x)) ++hits;
        }
        return boxvol * hits / n_pts;
      }
      default:
        break;
    }
  }
  if (m == d - 1) {
    switch (B.kind()) {
      case BodyKind::Ball:
        return 0.5 * omega(d) * std::pow(B.radius(), d - 1);
      case BodyKind::Polytope:
        return 0.5 * polytope_boundary_measure(B.normals(), B.offsets());
      default:
        break;
    }
  }
  if (m == 1 && d >= 3) {
    if (B.kind() == BodyKind::Ball || B.kind() == BodyKind::Polytope)
      return v1_mean_width_mc(B, 256, rng);
  }
  throw not_available("section_intrinsic_volume: V_" + std::to_string(m) +
                      " unsupported for this section variant");
}

double radial_distance(const ConvexBody& K, const Vec& u) {
  if (!K.contains(zeros(K.ambient())))
    throw std::domain_error("radial_distance: body must contain the origin");
  double hi = K.circumradius() * (1.0 + 1e-9) + 1e-9;
  if (K.contains(scaled(u, hi))) return hi;
  double lo = 0.0;
  while (hi - lo > 1e-10) {
    double mid = 0.5 * (lo + hi);
    if (K.contains(scaled(u, mid)))
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace crofton
