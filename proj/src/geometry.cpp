#include "crofton/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace crofton {

namespace {

// Modified Gram-Schmidt with one re-orthogonalization pass. When
// drop_dependent is false a small residual throws; otherwise the vector
// is skipped. Residuals are measured relative to max(1, |v|).
std::vector<Vec> mgs(const std::vector<Vec>& vectors, bool drop_dependent, double tol) {
  std::vector<Vec> basis;
  basis.reserve(vectors.size());
  for (const Vec& v : vectors) {
    Vec w = v;
    for (int pass = 0; pass < 2; ++pass)
      for (const Vec& u : basis) axpy(-dot(w, u), u, w);
    double r = norm(w);
    if (r < tol * std::max(1.0, norm(v))) {
      if (drop_dependent) continue;
      throw degenerate_input("orthonormalize: rank-deficient input (residual " +
                             std::to_string(r) + ")");
    }
    for (double& c : w) c /= r;
    basis.push_back(std::move(w));
  }
  return basis;
}

}  // namespace

Subspace::Subspace(int ambient, std::vector<Vec> frame)
    : ambient_(ambient), frame_(std::move(frame)) {
  if (static_cast<int>(frame_.size()) > ambient_)
    throw std::domain_error("Subspace: frame larger than ambient dimension");
  for (std::size_t i = 0; i < frame_.size(); ++i) {
    if (static_cast<int>(frame_[i].size()) != ambient_)
      throw std::domain_error("Subspace: frame vector has wrong length");
    for (std::size_t j = 0; j <= i; ++j) {
      double g = dot(frame_[i], frame_[j]);
      double expected = (i == j) ? 1.0 : 0.0;
      if (std::fabs(g - expected) > kOrthoTol)
        throw degenerate_input("Subspace: frame is not orthonormal");
    }
  }
}

Subspace Subspace::trivial(int ambient) { return Subspace(ambient, {}); }

Subspace Subspace::full(int ambient) {
  std::vector<Vec> frame;
  frame.reserve(static_cast<std::size_t>(ambient));
  for (int i = 0; i < ambient; ++i) frame.push_back(basis_vec(ambient, i));
  return Subspace(ambient, std::move(frame));
}

Vec Subspace::project(const Vec& x) const {
  Vec p = zeros(ambient_);
  for (const Vec& u : frame_) axpy(dot(x, u), u, p);
  return p;
}

Vec Subspace::reject(const Vec& x) const {
  Vec r = x;
  for (const Vec& u : frame_) axpy(-dot(r, u), u, r);
  return r;
}

Vec Subspace::coords(const Vec& x) const {
  Vec t(frame_.size());
  for (std::size_t i = 0; i < frame_.size(); ++i) t[i] = dot(x, frame_[i]);
  return t;
}

Vec Subspace::embed(const Vec& t) const {
  Vec x = zeros(ambient_);
  for (std::size_t i = 0; i < frame_.size(); ++i) axpy(t[i], frame_[i], x);
  return x;
}

bool Subspace::contains(const Vec& x, double tol) const {
  return norm(reject(x)) <= tol * std::max(1.0, norm(x));
}

Flat::Flat(Subspace direction, const Vec& offset) : direction_(std::move(direction)) {
  if (static_cast<int>(offset.size()) != direction_.ambient())
    throw std::domain_error("Flat: offset has wrong length");
  offset_ = direction_.reject(offset);  // canonical representative, offset _|_ direction
}

Vec Flat::point_at(const Vec& coords) const { return add(offset_, direction_.embed(coords)); }

Vec Flat::project_point(const Vec& x) const {
  return add(offset_, direction_.project(sub(x, offset_)));
}

Subspace orthonormalize(int ambient, const std::vector<Vec>& vectors) {
  return Subspace(ambient, mgs(vectors, false, kOrthoTol));
}

std::vector<Vec> complement_frame(const Subspace& L) {
  int n = L.ambient();
  std::vector<Vec> candidates = L.frame();
  for (int i = 0; i < n; ++i) candidates.push_back(basis_vec(n, i));
  std::vector<Vec> all = mgs(candidates, true, 1e-8);
  if (static_cast<int>(all.size()) != n)
    throw degenerate_input("complement_frame: could not complete basis");
  return {all.begin() + L.dim(), all.end()};
}

Subspace span_union(const Subspace& a, const Subspace& b) {
  std::vector<Vec> vs = a.frame();
  vs.insert(vs.end(), b.frame().begin(), b.frame().end());
  return Subspace(a.ambient(), mgs(vs, true, 1e-12));
}

Subspace flat_span(const Flat& E) {
  if (norm(E.offset()) <= 1e-13) return E.direction();
  std::vector<Vec> vs = E.direction().frame();
  vs.push_back(E.offset());
  return Subspace(E.ambient(), mgs(vs, true, 1e-13));
}

double nabla(const std::vector<Vec>& xs) {
  // product of Gram-Schmidt residual norms = sqrt(det Gram); residuals
  // below 1e-14 (relative) are treated as exact rank deficiency
  double prod = 1.0;
  std::vector<Vec> basis;
  for (const Vec& v : xs) {
    Vec w = v;
    for (int pass = 0; pass < 2; ++pass)
      for (const Vec& u : basis) axpy(-dot(w, u), u, w);
    double r = norm(w);
    if (r < 1e-14 * std::max(1.0, norm(v))) return 0.0;
    prod *= r;
    for (double& c : w) c /= r;
    basis.push_back(std::move(w));
  }
  return prod;
}

double delta_simplex(const std::vector<Vec>& pts) {
  if (pts.empty()) throw std::domain_error("delta_simplex: need at least one point");
  const std::size_t q = pts.size() - 1;
  if (q == 0) return 1.0;
  std::vector<Vec> diffs;
  diffs.reserve(q);
  for (std::size_t i = 1; i < pts.size(); ++i) diffs.push_back(sub(pts[i], pts[0]));
  double f = 1.0;
  for (std::size_t i = 2; i <= q; ++i) f *= static_cast<double>(i);
  return nabla(diffs) / f;
}

double nabla_mixed(const std::vector<Vec>& xs, const Subspace& M) {
  std::vector<Vec> stacked = xs;
  stacked.insert(stacked.end(), M.frame().begin(), M.frame().end());
  return nabla(stacked);
}

double subspace_det(const Subspace& L, const Subspace& M) {
  if (L.ambient() != M.ambient())
    throw std::domain_error("subspace_det: ambient dimensions differ");
  if (L.dim() == 0 || M.dim() == 0) return 1.0;
  if (L.dim() + M.dim() > L.ambient())
    throw std::domain_error("subspace_det: dim L + dim M exceeds ambient dimension");
  double v = nabla_mixed(L.frame(), M);
  return std::min(v, 1.0);
}

double dist_point_flat(const Vec& x, const Flat& E) { return norm(sub(x, E.project_point(x))); }

double dist_point_subspace(const Vec& x, const Subspace& L) { return norm(L.reject(x)); }

double dist_flat_subspace(const Flat& E, const Subspace& L) {
  if (E.dim() + L.dim() > E.ambient() - 1)
    throw std::domain_error("dist_flat_subspace: need dim E + dim L <= n - 1");
  Subspace joint = span_union(E.direction(), L);
  return norm(joint.reject(E.offset()));
}

double d_weight(const Flat& E, const Subspace& L0) {
  if (E.dim() + L0.dim() > E.ambient() - 1)
    throw std::domain_error("d_weight: need dim E + dim L0 <= n - 1");
  return dist_flat_subspace(E, L0) * subspace_det(E.direction(), L0);
}

double d_weight_via_span(const Flat& E, const Subspace& L0) {
  if (E.dim() + L0.dim() > E.ambient() - 1)
    throw std::domain_error("d_weight_via_span: need dim E + dim L0 <= n - 1");
  double d0 = norm(E.offset());
  if (d0 == 0.0) return 0.0;
  return d0 * subspace_det(flat_span(E), L0);
}

}  // namespace crofton
