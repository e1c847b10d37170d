#include "crofton/sampling.hpp"

#include <cmath>
#include <stdexcept>

#include "crofton/constants.hpp"

namespace crofton {

namespace {

// Gram-Schmidt of a square Gaussian matrix gives a Haar draw from O(m),
// reflections included (the m = 1 case is +-1 with equal probability).
std::vector<Vec> haar_orthogonal(int m, RngStream& rng) {
  for (;;) {
    std::vector<Vec> g;
    g.reserve(m);
    for (int i = 0; i < m; ++i) g.push_back(gaussian_vec(m, rng));
    try {
      return orthonormalize(m, g).frame();
    } catch (const degenerate_input&) {
      // probability-zero event, redraw
    }
  }
}

}  // namespace

Vec gaussian_vec(int n, RngStream& rng) {
  Vec v(n);
  for (double& c : v) c = rng.next_gaussian();
  return v;
}

Vec uniform_on_sphere(int d, RngStream& rng) {
  if (d < 1) throw std::domain_error("uniform_on_sphere: need d >= 1");
  for (;;) {
    Vec v = gaussian_vec(d, rng);
    double r = norm(v);
    if (r > 1e-12) return scaled(v, 1.0 / r);
  }
}

Vec uniform_in_ball(int d, double R, RngStream& rng) {
  if (d < 0) throw std::domain_error("uniform_in_ball: need d >= 0");
  if (d == 0) return {};
  Vec u = uniform_on_sphere(d, rng);
  double radius = R * std::pow(rng.next_double(), 1.0 / d);
  return scaled(u, radius);
}

Subspace sample_grassmannian(int n, int k, RngStream& rng) {
  if (k < 0 || k > n) throw std::domain_error("sample_grassmannian: need 0 <= k <= n");
  if (k == 0) return Subspace::trivial(n);
  if (k == n) return Subspace::full(n);
  for (;;) {
    std::vector<Vec> g;
    g.reserve(k);
    for (int i = 0; i < k; ++i) g.push_back(gaussian_vec(n, rng));
    try {
      return orthonormalize(n, g);
    } catch (const degenerate_input&) {
      // probability-zero event under the continuous sampler; redraw
    }
  }
}

Subspace sample_grassmannian_containing(const Subspace& L0, int k, RngStream& rng) {
  const int n = L0.ambient();
  const int r = L0.dim();
  if (k < r || k > n)
    throw std::domain_error("sample_grassmannian_containing: need dim L0 <= k <= n");
  if (k == r) return L0;
  if (k == n) return Subspace::full(n);
  std::vector<Vec> comp = complement_frame(L0);
  Subspace w = sample_grassmannian(n - r, k - r, rng);
  std::vector<Vec> frame = L0.frame();
  for (int i = 0; i < w.dim(); ++i) {
    Vec v = zeros(n);
    for (int j = 0; j < n - r; ++j) axpy(w.basis(i)[j], comp[j], v);
    frame.push_back(std::move(v));
  }
  return Subspace(n, std::move(frame));
}

Mat sample_rotation_fixing(const Subspace& L0, RngStream& rng) {
  const int n = L0.ambient();
  const int m = n - L0.dim();
  if (m < 1) throw std::domain_error("sample_rotation_fixing: need dim L0 < n");
  std::vector<Vec> comp = complement_frame(L0);
  std::vector<Vec> q = haar_orthogonal(m, rng);
  Mat rot(n, zeros(n));
  auto add_outer = [&rot, n](const Vec& a, const Vec& b, double s) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) rot[i][j] += s * a[i] * b[j];
  };
  for (const Vec& l : L0.frame()) add_outer(l, l, 1.0);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) add_outer(comp[a], comp[b], q[a][b]);
  return rot;
}

HitFlat sample_hitting_flat(const Subspace& L, int q, double R, RngStream& rng) {
  const int n = L.ambient();
  const int k = L.dim();
  if (q < 0 || q > k) throw std::domain_error("sample_hitting_flat: need 0 <= q <= dim L");
  if (R <= 0.0) throw std::domain_error("sample_hitting_flat: need R > 0");
  Subspace msub = sample_grassmannian(k, q, rng);  // in L coordinates
  std::vector<Vec> mframe;
  mframe.reserve(q);
  for (int i = 0; i < q; ++i) mframe.push_back(L.embed(msub.basis(i)));
  Subspace direction(n, std::move(mframe));
  Vec z = zeros(n);
  if (q < k) {
    std::vector<Vec> comp = complement_frame(msub);  // of M within L coordinates
    Vec t = uniform_in_ball(k - q, R, rng);
    for (int i = 0; i < k - q; ++i) axpy(t[i], L.embed(comp[i]), z);
  }
  double weight = kappa(k - q) * std::pow(R, k - q);
  return {Flat(std::move(direction), z), weight};
}

BallTranslate sample_translate_in_complement(const Subspace& L, double R, RngStream& rng) {
  const int n = L.ambient();
  const int k = L.dim();
  if (k >= n) throw std::domain_error("sample_translate_in_complement: need dim L < n");
  if (R <= 0.0) throw std::domain_error("sample_translate_in_complement: need R > 0");
  std::vector<Vec> comp = complement_frame(L);
  Vec t = uniform_in_ball(n - k, R, rng);
  Vec x = zeros(n);
  for (int i = 0; i < n - k; ++i) axpy(t[i], comp[i], x);
  return {std::move(x), kappa(n - k) * std::pow(R, n - k)};
}

}  // namespace crofton
