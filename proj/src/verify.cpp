#include "crofton/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>

#include "crofton/constants.hpp"
#include "crofton/parallel.hpp"

namespace crofton {

namespace {

constexpr double kSigma = 4.0;

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(10);
  os << v;
  return os.str();
}

// |diff| in standard-error units; a zero-variance comparison degenerates
// to an exact test at 1e-12 relative
double zscore(double lhs, double rhs, double se) {
  double diff = std::fabs(lhs - rhs);
  if (se > 0.0) return diff / se;
  return diff <= 1e-12 * std::max(1.0, std::fabs(rhs)) ? 0.0 : std::numeric_limits<double>::infinity();
}

CheckReport two_route_report(std::string name, const Estimate& lhs, double rhs,
                             double rhs_se, std::string details) {
  CheckReport rep;
  rep.name = std::move(name);
  rep.lhs = lhs.mean;
  rep.lhs_se = lhs.std_err;
  rep.rhs = rhs;
  rep.rhs_se = rhs_se;
  rep.tolerance_rule = "|lhs - rhs| <= 4 combined standard errors";
  double se = std::sqrt(lhs.std_err * lhs.std_err + rhs_se * rhs_se);
  rep.passed = zscore(lhs.mean, rhs, se) <= kSigma;
  rep.details = std::move(details);
  return rep;
}

// canonical fixed subspace span{e_1, ..., e_r}
Subspace canonical_subspace(int n, int r) {
  std::vector<Vec> f;
  for (int i = 0; i < r; ++i) f.push_back(basis_vec(n, i));
  return Subspace(n, std::move(f));
}

// smooth, strictly positive test integrand supported on flats meeting the
// unit ball; isolates measure-theoretic correctness from body sectioning
double bp_integrand(const Flat& E) {
  double d0 = norm(E.offset());
  if (d0 > 1.0) return 0.0;
  return std::exp(-d0 * d0);
}

}  // namespace

CheckReport check_classical_crofton(int n, int q, int j, const ConvexBody& body,
                                    long long budget, std::uint64_t seed) {
  if (!(0 <= j && j <= q && q <= n))
    throw std::domain_error("check_classical_crofton: need 0 <= j <= q <= n");
  // exact restriction radius: the integrand vanishes on flats missing the
  // body, and indicator-type integrands would otherwise pick up the
  // radius-inflation guard as a spurious constant factor
  const double R = body.circumradius();
  Subspace full = Subspace::full(n);
  RngStream rng(seed);
  Accumulator acc;
  for (long long s = 0; s < budget; ++s) {
    HitFlat hf = sample_hitting_flat(full, q, R, rng);
    double val = 0.0;
    if (auto sec = section(body, hf.flat))
      val = hf.weight * section_intrinsic_volume(*sec, q - j, rng);
    acc.add(val);
  }
  double rhs = crofton_const(q - j, n, n - j, q) * exact_intrinsic_volume(body, n - j);
  std::string details = "n=" + std::to_string(n) + " q=" + std::to_string(q) +
                        " j=" + std::to_string(j) + "; flat integral vs exact " + fmt(rhs);
  return two_route_report("classical-crofton", acc.estimate(seed), rhs, 0.0, details);
}

CheckReport check_bp_linear(int n, int q, int r, int k, std::uint64_t seed,
                            long long budget) {
  if (!(q + r + 1 <= k && k <= n))
    throw std::domain_error("check_bp_linear: need q + r + 1 <= k <= n");
  Subspace L0 = canonical_subspace(n, r);
  const double alpha = alpha_const(n, k, q, r);

  RngStream rng_lhs = RngStream(seed).substream(1);
  RngStream rng_rhs = RngStream(seed).substream(2);

  const long long outer = std::max<long long>(1, budget / 2 / 64);
  Accumulator lhs;
  for (long long o = 0; o < outer; ++o) {
    Subspace L = sample_grassmannian_containing(L0, k, rng_lhs);
    Accumulator inner;
    for (int s = 0; s < 64; ++s) {
      HitFlat hf = sample_hitting_flat(L, q, 1.0, rng_lhs);
      double f = bp_integrand(hf.flat);
      double w = (n == k) ? 1.0 : std::pow(d_weight(hf.flat, L0), n - k);
      inner.add(hf.weight * f * w);
    }
    lhs.add(inner.mean());
  }

  Subspace full = Subspace::full(n);
  Accumulator rhs;
  for (long long s = 0; s < budget / 2; ++s) {
    HitFlat hf = sample_hitting_flat(full, q, 1.0, rng_rhs);
    rhs.add(alpha * hf.weight * bp_integrand(hf.flat));
  }

  Estimate el = lhs.estimate(seed), er = rhs.estimate(seed);
  std::string details = "(n,q,r,k)=(" + std::to_string(n) + "," + std::to_string(q) + "," +
                        std::to_string(r) + "," + std::to_string(k) +
                        "); nested route vs alpha-scaled full-space route, alpha=" +
                        fmt(alpha);
  return two_route_report("bp-linear", el, er.mean, er.std_err, details);
}

CheckReport check_bp_affine(int n, int q, int r, int k, std::uint64_t seed,
                            long long budget) {
  if (!(q + r <= k && k <= n))
    throw std::domain_error("check_bp_affine: need q + r <= k <= n");
  Subspace L0 = canonical_subspace(n, r);
  const double lead = (b_coeff(k - r, q) / b_coeff(n - r, q)) * (b_coeff(n, q) / b_coeff(k, q));

  RngStream rng_lhs = RngStream(seed).substream(1);
  RngStream rng_rhs = RngStream(seed).substream(2);

  const long long outer = std::max<long long>(1, budget / 2 / 64);
  Accumulator lhs;
  for (long long o = 0; o < outer; ++o) {
    Subspace L = sample_grassmannian_containing(L0, k, rng_lhs);
    Vec x = zeros(n);
    double wx = 1.0;
    if (k < n) {
      BallTranslate tr = sample_translate_in_complement(L, 1.0, rng_lhs);
      x = std::move(tr.offset);
      wx = tr.weight;
    }
    double rho2 = 1.0 - norm2(x);
    if (rho2 <= 0.0) {
      lhs.add(0.0);
      continue;
    }
    Accumulator inner;
    for (int s = 0; s < 64; ++s) {
      double val = 0.0;
      if (q == k) {
        Flat E(L, x);
        double w = (n == k) ? 1.0 : std::pow(subspace_det(L, L0), n - k);
        val = bp_integrand(E) * w;
      } else {
        HitFlat hf = sample_hitting_flat(L, q, std::sqrt(rho2), rng_lhs);
        Flat E(hf.flat.direction(), add(hf.flat.offset(), x));
        double f = bp_integrand(E);
        if (f != 0.0) {
          double w = (n == k) ? 1.0 : std::pow(subspace_det(E.direction(), L0), n - k);
          val = hf.weight * f * w;
        }
      }
      inner.add(val);
    }
    lhs.add(wx * inner.mean());
  }

  Subspace full = Subspace::full(n);
  Accumulator rhs;
  for (long long s = 0; s < budget / 2; ++s) {
    HitFlat hf = sample_hitting_flat(full, q, 1.0, rng_rhs);
    rhs.add(lead * hf.weight * bp_integrand(hf.flat));
  }

  std::string details = "(n,q,r,k)=(" + std::to_string(n) + "," + std::to_string(q) + "," +
                        std::to_string(r) + "," + std::to_string(k) + "); leading constant " +
                        fmt(lead);
  if (q < k - r) {
    // the b-ratio constant must also match its reduced form
    double reduced = 1.0 / (alpha_const(n, k, q, r) * omega(n - r - q) / omega(k - r - q));
    double rel = std::fabs(lead - reduced) / lead;
    details += "; constant reduction rel err " + fmt(rel);
    if (rel > 1e-12) {
      CheckReport rep = two_route_report("bp-affine", lhs.estimate(seed), 0.0, 0.0, details);
      rep.passed = false;
      return rep;
    }
  } else {
    details += "; q = k - r boundary, reduced form undefined";
  }
  Estimate er = rhs.estimate(seed);
  return two_route_report("bp-affine", lhs.estimate(seed), er.mean, er.std_err, details);
}

CheckReport check_uniqueness_q(int n, int k, int r, int j, const ConvexBody& body,
                               int subspace_draws, long long budget, std::uint64_t seed) {
  CheckReport rep;
  rep.name = "uniqueness-q";
  rep.tolerance_rule = "per-L agreement of consecutive q at 4 combined standard errors";
  const int qmax = k - (r + 1);
  if (j >= qmax) {
    rep.passed = true;
    rep.details = "singleton q-range {" + std::to_string(j) + "}, skipped";
    return rep;
  }
  Subspace L0 = canonical_subspace(n, r);
  RngStream rng(seed);
  double worst = 0.0;
  bool ok = true;
  for (int t = 0; t < subspace_draws; ++t) {
    Subspace L = sample_grassmannian_containing(L0, k, rng);
    for (int q = j; q < qmax; ++q) {
      EstimatorSpec s1{{n, k, r, j, q}, body, L0, 1, budget, 0.0, seed};
      EstimatorSpec s2 = s1;
      s2.idx.q = q + 1;
      RngStream r1 = rng.substream(RngStream::mix(2 * t, q));
      RngStream r2 = rng.substream(RngStream::mix(2 * t + 1, q));
      Estimate e1 = measurement_phi(s1, L, r1);
      Estimate e2 = measurement_phi(s2, L, r2);
      double se = std::sqrt(e1.std_err * e1.std_err + e2.std_err * e2.std_err);
      double z = se > 0.0 ? std::fabs(e1.mean - e2.mean) / se : 0.0;
      worst = std::max(worst, z);
      if (z > kSigma) ok = false;
      if (t == 0 && q == j) {
        rep.lhs = e1.mean;
        rep.lhs_se = e1.std_err;
        rep.rhs = e2.mean;
        rep.rhs_se = e2.std_err;
      }
    }
  }
  rep.passed = ok;
  rep.details = "(n,k,r,j)=(" + std::to_string(n) + "," + std::to_string(k) + "," +
                std::to_string(r) + "," + std::to_string(j) + "); " +
                std::to_string(subspace_draws) + " subspaces, worst |z| = " + fmt(worst);
  return rep;
}

CheckReport check_uniqueness_q_affine(int n, int k, int r, int j, const ConvexBody& body,
                                      int subspace_draws, long long budget,
                                      std::uint64_t seed) {
  CheckReport rep;
  rep.name = "uniqueness-q-vertical";
  rep.tolerance_rule = "per-(L,x) agreement of consecutive q at 4 combined standard errors";
  const int qmax = k - r;
  if (j >= qmax) {
    rep.passed = true;
    rep.details = "singleton q-range {" + std::to_string(j) + "}, skipped";
    return rep;
  }
  Subspace L0 = canonical_subspace(n, r);
  RngStream rng(seed);
  double worst = 0.0;
  bool ok = true;
  for (int t = 0; t < subspace_draws; ++t) {
    Subspace L = sample_grassmannian_containing(L0, k, rng);
    Vec x = zeros(n);
    if (k < n) {
      // a fixed translation with a guaranteed nonempty section of the test body
      BallTranslate tr = sample_translate_in_complement(L, 0.5 * body.circumradius(), rng);
      x = std::move(tr.offset);
    }
    for (int q = j; q < qmax; ++q) {
      EstimatorSpec s1{{n, k, r, j, q}, body, L0, 1, budget, 0.0, seed};
      EstimatorSpec s2 = s1;
      s2.idx.q = q + 1;
      RngStream r1 = rng.substream(RngStream::mix(2 * t, q));
      RngStream r2 = rng.substream(RngStream::mix(2 * t + 1, q));
      Estimate e1 = vertical_measurement_tilde(s1, L, x, r1);
      Estimate e2 = vertical_measurement_tilde(s2, L, x, r2);
      double se = std::sqrt(e1.std_err * e1.std_err + e2.std_err * e2.std_err);
      double z = se > 0.0 ? std::fabs(e1.mean - e2.mean) / se : 0.0;
      worst = std::max(worst, z);
      if (z > kSigma) ok = false;
      if (t == 0 && q == j) {
        rep.lhs = e1.mean;
        rep.lhs_se = e1.std_err;
        rep.rhs = e2.mean;
        rep.rhs_se = e2.std_err;
      }
    }
  }
  rep.passed = ok;
  rep.details = "(n,k,r,j)=(" + std::to_string(n) + "," + std::to_string(k) + "," +
                std::to_string(r) + "," + std::to_string(j) + "); " +
                std::to_string(subspace_draws) + " (L,x) draws, worst |z| = " + fmt(worst);
  return rep;
}

CheckReport check_lemma_D(int n, int q, int r, int trials, std::uint64_t seed) {
  CheckReport rep;
  rep.name = "distance-weight-lemma";
  rep.tolerance_rule =
      "route (ii) vs definition rel <= 1e-10; simplex-ratio and one-dim-extension rel <= 1e-8";
  if (q + r > n - 1) throw std::domain_error("check_lemma_D: need q + r <= n - 1");
  RngStream rng(seed);
  double worst_ii = 0.0, worst_ratio = 0.0, worst_ext = 0.0;
  for (int t = 0; t < trials; ++t) {
    Subspace L0 = sample_grassmannian(n, r, rng);
    Subspace M = sample_grassmannian(n, q, rng);
    Vec z = M.reject(gaussian_vec(n, rng));
    Flat E(M, z);

    double d_def = d_weight_via_span(E, L0);
    double d_prod = d_weight(E, L0);
    double scale = std::max(1.0, std::fabs(d_def));
    worst_ii = std::max(worst_ii, std::fabs(d_def - d_prod) / scale);

    // affine-hull points x_i = z + (random combination in M)
    std::vector<Vec> pts;
    pts.push_back(z);
    for (int i = 0; i < q; ++i) {
      Vec g = M.project(gaussian_vec(n, rng));
      pts.push_back(add(z, g));
    }
    double num = nabla_mixed(pts, L0);
    double den = delta_simplex(pts);
    if (den > 1e-12) {
      double d_ratio = num / (factorial(q) * den);
      worst_ratio = std::max(worst_ratio, std::fabs(d_ratio - d_def) / scale);
    }

    if (q + r <= n - 2) {
      // extend E by a unit direction u orthogonal to M; the weight picks up
      // the length of u projected off span{L0, M, z}
      Vec u = M.reject(gaussian_vec(n, rng));
      u = scaled(u, 1.0 / norm(u));
      std::vector<Vec> dir = M.frame();
      dir.push_back(u);
      Flat E1(Subspace(n, dir), z);
      double lhs = d_weight_via_span(E1, L0);
      Subspace lmz = span_union(flat_span(E), L0);
      double rhs = d_def * norm(sub(u, lmz.project(u)));
      worst_ext = std::max(worst_ext, std::fabs(lhs - rhs) / scale);
    }
  }
  rep.lhs = worst_ii;
  rep.rhs = 0.0;
  rep.passed = worst_ii <= 1e-10 && worst_ratio <= 1e-8 && worst_ext <= 1e-8;
  rep.details = "(n,q,r)=(" + std::to_string(n) + "," + std::to_string(q) + "," +
                std::to_string(r) + "); worst rel: product " + fmt(worst_ii) + ", ratio " +
                fmt(worst_ratio) + ", extension " + fmt(worst_ext);
  return rep;
}

CheckReport check_sphere_identities(int n, std::uint64_t seed, long long budget) {
  CheckReport rep;
  rep.name = "sphere-identities";
  rep.tolerance_rule = "4 combined standard errors per comparison";
  if (n < 3) throw std::domain_error("check_sphere_identities: need n >= 3");
  RngStream rng(seed);
  bool ok = true;
  std::string details;

  // cylindrical decomposition with f(u) = exp(<u, a>)
  Vec a = zeros(n);
  const double avals[] = {0.3, -0.2, 0.5, 0.1, -0.4, 0.25};
  for (int i = 0; i < n; ++i) a[i] = avals[i % 6];
  Accumulator direct, nested, tpart;
  for (long long s = 0; s < budget; ++s) {
    Vec u = uniform_on_sphere(n, rng);
    direct.add(omega(n) * std::exp(dot(u, a)));
  }
  Vec v = basis_vec(n, n - 1);
  for (long long s = 0; s < budget; ++s) {
    Vec w0 = uniform_on_sphere(n - 1, rng);  // coordinates in v^perp
    Vec w = zeros(n);
    for (int i = 0; i < n - 1; ++i) w[i] = w0[i];
    double t = 2.0 * rng.next_double() - 1.0;
    Vec u = add(scaled(v, t), scaled(w, std::sqrt(1.0 - t * t)));
    double jac = std::pow(1.0 - t * t, 0.5 * (n - 3));
    nested.add(2.0 * omega(n - 1) * std::exp(dot(u, a)) * jac);
    tpart.add(2.0 * jac);
  }
  {
    Estimate ed = direct.estimate(seed), en = nested.estimate(seed);
    double se = std::sqrt(ed.std_err * ed.std_err + en.std_err * en.std_err);
    double z = zscore(ed.mean, en.mean, se);
    if (z > kSigma) ok = false;
    details += "cylindrical z=" + fmt(z);
    Estimate et = tpart.estimate(seed);
    double target = omega(n) / omega(n - 1);
    double zt = zscore(et.mean, target, et.std_err);
    if (zt > kSigma) ok = false;
    details += "; axis-integral z=" + fmt(zt);
  }

  // projection moment: sphere average of |p(u|L')|^j
  const int cases[3][3] = {{3, 1, 1}, {4, 2, 2}, {5, 1, 3}};
  for (const auto& c : cases) {
    int d = c[0], j = c[1], p = c[2];
    Subspace Lp = canonical_subspace(d, p);
    Accumulator mom;
    for (long long s = 0; s < budget; ++s) {
      Vec u = uniform_on_sphere(d, rng);
      mom.add(omega(d) * std::pow(norm(Lp.project(u)), j));
    }
    double target = omega(d + j) / omega(p + j) * omega(p);
    Estimate em = mom.estimate(seed);
    double z = zscore(em.mean, target, em.std_err);
    if (z > kSigma) ok = false;
    details += "; moment(d=" + std::to_string(d) + ",j=" + std::to_string(j) +
               ",p=" + std::to_string(p) + ") z=" + fmt(z);
  }
  rep.passed = ok;
  rep.details = details;
  return rep;
}

CheckReport impossibility_demo(int n, int k, int r, int m, std::uint64_t seed,
                               long long budget) {
  CheckReport rep;
  rep.name = "impossibility";
  rep.tolerance_rule = "sections agree on all probes; V_m differs by construction";
  if (!(r + 1 <= k && k <= n - 1)) throw std::domain_error("impossibility_demo: need r+1 <= k <= n-1");
  if (!(0 <= m && m <= r + 1)) throw std::domain_error("impossibility_demo: need 0 <= m <= r+1");
  Subspace L0 = canonical_subspace(n, r);
  RngStream rng(seed);

  const long long n_subspaces = std::max<long long>(1, budget / 10000);
  const long long n_probes = 10000;

  if (m == 0) {
    // singleton off the fixed subspace against the empty set
    Vec pt = basis_vec(n, n - 1);
    long long disagreements = 0;
    for (long long t = 0; t < n_subspaces; ++t) {
      Subspace L = sample_grassmannian_containing(L0, k, rng);
      for (long long p = 0; p < n_probes; ++p) {
        Vec x = L.embed(uniform_in_ball(k, 2.0, rng));
        bool in1 = norm(sub(x, pt)) <= 1e-10;  // membership in the singleton
        bool in2 = false;                      // empty set
        if (in1 != in2) ++disagreements;
      }
    }
    rep.lhs = 1.0;  // V_0 of the singleton
    rep.rhs = 0.0;  // V_0 of the empty set
    rep.passed = disagreements == 0;
    rep.details = "m=0 singleton vs empty set; " + std::to_string(disagreements) +
                  " probe disagreements; V_0: 1 vs 0";
    return rep;
  }

  // K1 = (unit ball of L') + segment [o, u], K2 = unit ball of L',
  // with L' the first m-1 coordinate axes and u the last axis direction
  Subspace Lp = canonical_subspace(n, m - 1);
  Vec u = basis_vec(n, n - 1);
  auto h1 = [Lp, u](const Vec& v) {
    return norm(Lp.project(v)) + std::max(0.0, dot(v, u));
  };
  auto member1 = [Lp, u](const Vec& x) {
    Vec a = Lp.project(x);
    if (norm(a) > 1.0 + 1e-10) return false;
    Vec rest = sub(x, a);
    double t = dot(rest, u);
    if (t < -1e-10 || t > 1.0 + 1e-10) return false;
    return norm(sub(rest, scaled(u, t))) <= 1e-10;
  };
  auto h2 = [Lp](const Vec& v) { return norm(Lp.project(v)); };
  auto member2 = [Lp](const Vec& x) {
    Vec a = Lp.project(x);
    return norm(a) <= 1.0 + 1e-10 && norm(sub(x, a)) <= 1e-10;
  };
  ConvexBody K1 = ConvexBody::support_body(n, h1, member1, std::sqrt(2.0));
  ConvexBody K2 = ConvexBody::support_body(n, h2, member2, 1.0);

  long long disagreements = 0;
  for (long long t = 0; t < n_subspaces; ++t) {
    Subspace L = sample_grassmannian_containing(L0, k, rng);
    for (long long p = 0; p < n_probes; ++p) {
      Vec x = L.embed(uniform_in_ball(k, 2.0, rng));
      if (K1.contains(x) != K2.contains(x)) ++disagreements;
    }
  }

  // dimension argument: K1 contains the m-simplex conv{o, e_1..e_{m-1}, u},
  // so V_m(K1) >= 1/m! > 0, while K2 has zero width orthogonal to the
  // (m-1)-dimensional L', certified through its support function
  bool k1_has_simplex = K1.contains(zeros(n)) && K1.contains(u);
  for (int i = 0; i < m - 1; ++i)
    k1_has_simplex = k1_has_simplex && K1.contains(basis_vec(n, i));
  bool k2_flat = true;
  for (const Vec& w : complement_frame(Lp)) {
    double width = K2.support(w) + K2.support(scaled(w, -1.0));
    if (width > 1e-12) k2_flat = false;
  }
  double vm_lower = 1.0 / factorial(m);

  rep.lhs = vm_lower;  // a positive lower bound for V_m(K1)
  rep.rhs = 0.0;       // V_m(K2), zero by flatness
  rep.passed = disagreements == 0 && k1_has_simplex && k2_flat;
  rep.details = "(n,k,r,m)=(" + std::to_string(n) + "," + std::to_string(k) + "," +
                std::to_string(r) + "," + std::to_string(m) + "); " +
                std::to_string(disagreements) + " probe disagreements; V_m(K1) >= " +
                fmt(vm_lower) + ", V_m(K2) = 0";
  return rep;
}

namespace {

struct BatteryJob {
  std::string name;
  std::function<CheckReport(std::uint64_t, long long)> run;
};

std::vector<BatteryJob> battery_jobs() {
  auto ball3 = []() { return ConvexBody::ball(zeros(3), 1.0); };
  auto ball4 = []() { return ConvexBody::ball(zeros(4), 1.0); };
  auto ball5 = []() { return ConvexBody::ball(zeros(5), 1.0); };
  auto box4 = []() { return ConvexBody::box(Vec{-1, -1, -1, -1}, Vec{1, 1, 1, 1}); };

  std::vector<BatteryJob> jobs;
  jobs.push_back({"classical-crofton(3,2,0)", [=](std::uint64_t s, long long b) {
                    return check_classical_crofton(3, 2, 0, ball3(), b, s);
                  }});
  jobs.push_back({"classical-crofton(3,2,2)", [=](std::uint64_t s, long long b) {
                    return check_classical_crofton(3, 2, 2, ball3(), b, s);
                  }});
  jobs.push_back({"classical-crofton(3,0,0)", [=](std::uint64_t s, long long b) {
                    return check_classical_crofton(3, 0, 0, ball3(), b, s);
                  }});
  jobs.push_back({"bp-linear(3,1,1,3)", [](std::uint64_t s, long long b) {
                    return check_bp_linear(3, 1, 1, 3, s, b);
                  }});
  jobs.push_back({"bp-linear(4,1,1,3)", [](std::uint64_t s, long long b) {
                    return check_bp_linear(4, 1, 1, 3, s, b);
                  }});
  jobs.push_back({"bp-linear(3,0,1,2)", [](std::uint64_t s, long long b) {
                    return check_bp_linear(3, 0, 1, 2, s, b);
                  }});
  jobs.push_back({"bp-affine(3,1,1,3)", [](std::uint64_t s, long long b) {
                    return check_bp_affine(3, 1, 1, 3, s, b);
                  }});
  jobs.push_back({"bp-affine(3,1,1,2)", [](std::uint64_t s, long long b) {
                    return check_bp_affine(3, 1, 1, 2, s, b);
                  }});
  jobs.push_back({"bp-affine(4,2,1,3)", [](std::uint64_t s, long long b) {
                    return check_bp_affine(4, 2, 1, 3, s, b);
                  }});
  jobs.push_back({"uniqueness-q(4,3,0,0)", [=](std::uint64_t s, long long b) {
                    return check_uniqueness_q(4, 3, 0, 0, ball4(), 5, b / 100, s);
                  }});
  jobs.push_back({"uniqueness-q(4,3,0,1)", [=](std::uint64_t s, long long b) {
                    return check_uniqueness_q(4, 3, 0, 1, box4(), 5, b / 100, s);
                  }});
  jobs.push_back({"uniqueness-q(5,4,1,0)", [=](std::uint64_t s, long long b) {
                    return check_uniqueness_q(5, 4, 1, 0, ball5(), 5, b / 100, s);
                  }});
  jobs.push_back({"uniqueness-q-vertical(3,2,1,0)", [=](std::uint64_t s, long long b) {
                    return check_uniqueness_q_affine(3, 2, 1, 0, ball3(), 5, b / 100, s);
                  }});
  jobs.push_back({"uniqueness-q-vertical(4,3,1,0)", [=](std::uint64_t s, long long b) {
                    return check_uniqueness_q_affine(4, 3, 1, 0, ball4(), 5, b / 100, s);
                  }});
  jobs.push_back({"uniqueness-q-vertical(4,3,1,1)", [=](std::uint64_t s, long long b) {
                    return check_uniqueness_q_affine(4, 3, 1, 1, ball4(), 5, b / 100, s);
                  }});
  jobs.push_back({"lemma-d(5,2,1)", [](std::uint64_t s, long long b) {
                    (void)b;
                    return check_lemma_D(5, 2, 1, 200, s);
                  }});
  jobs.push_back({"lemma-d(4,1,1)", [](std::uint64_t s, long long b) {
                    (void)b;
                    return check_lemma_D(4, 1, 1, 200, s);
                  }});
  jobs.push_back({"sphere-identities(3)", [](std::uint64_t s, long long b) {
                    return check_sphere_identities(3, s, b / 4);
                  }});
  jobs.push_back({"sphere-identities(4)", [](std::uint64_t s, long long b) {
                    return check_sphere_identities(4, s, b / 4);
                  }});
  jobs.push_back({"sphere-identities(5)", [](std::uint64_t s, long long b) {
                    return check_sphere_identities(5, s, b / 4);
                  }});
  jobs.push_back({"impossibility(m0)", [](std::uint64_t s, long long b) {
                    return impossibility_demo(3, 2, 1, 0, s, b / 100);
                  }});
  jobs.push_back({"impossibility(3,2,1,2)", [](std::uint64_t s, long long b) {
                    return impossibility_demo(3, 2, 1, 2, s, b / 100);
                  }});
  jobs.push_back({"impossibility(4,3,1,1)", [](std::uint64_t s, long long b) {
                    return impossibility_demo(4, 3, 1, 1, s, b / 100);
                  }});
  return jobs;
}

}  // namespace

std::vector<std::string> battery_check_names() {
  std::vector<std::string> names;
  for (const auto& j : battery_jobs()) names.push_back(j.name);
  return names;
}

std::vector<CheckReport> run_battery(const std::vector<std::string>& names,
                                     std::uint64_t seed, long long budget, int jobs) {
  auto all = battery_jobs();
  std::vector<const BatteryJob*> selected;
  if (names.empty() || (names.size() == 1 && names[0] == "all")) {
    for (const auto& j : all) selected.push_back(&j);
  } else {
    for (const std::string& want : names) {
      bool found = false;
      for (const auto& j : all) {
        if (j.name == want || j.name.substr(0, j.name.find('(')) == want) {
          selected.push_back(&j);
          found = true;
        }
      }
      if (!found) throw config_error("unknown check name: " + want);
    }
  }
  return run_chunked<CheckReport>(
      static_cast<long long>(selected.size()), jobs, [&](long long i) {
        return selected[static_cast<std::size_t>(i)]->run(
            RngStream::mix(seed, static_cast<std::uint64_t>(i)), budget);
      });
}

std::vector<CheckReport> default_battery(std::uint64_t seed, long long budget, int jobs) {
  return run_battery({}, seed, budget, jobs);
}

}  // namespace crofton
