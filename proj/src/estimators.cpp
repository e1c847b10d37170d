#include "crofton/estimators.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "crofton/constants.hpp"
#include "crofton/parallel.hpp"

namespace crofton {

namespace {

constexpr long long kOuterChunk = 512;

std::string idx_str(const Indices& ix) {
  return "n=" + std::to_string(ix.n) + ", k=" + std::to_string(ix.k) +
         ", r=" + std::to_string(ix.r) + ", j=" + std::to_string(ix.j) +
         ", q=" + std::to_string(ix.q);
}

// weight^e with the e = 0 case short-circuited so k = n runs never
// evaluate the distance/angle weights at all
double pow_weight(double base, int e) { return e == 0 ? 1.0 : std::pow(base, e); }

// support box of K in the directions of the given orthonormal frame;
// returns false when the box is empty
bool support_box(const ConvexBody& K, const std::vector<Vec>& frame, Vec& lo, Vec& hi) {
  lo.resize(frame.size());
  hi.resize(frame.size());
  for (std::size_t i = 0; i < frame.size(); ++i) {
    hi[i] = K.support(frame[i]);
    lo[i] = -K.support(scaled(frame[i], -1.0));
    if (lo[i] > hi[i]) return false;
  }
  return true;
}

}  // namespace

void Indices::validate(Design design) const {
  if (n < 3) throw std::domain_error("indices: ambient dimension must satisfy n >= 3, got n=" +
                                     std::to_string(n));
  if (!(r >= 0 && r + 1 <= k && k <= n))
    throw std::domain_error("indices: need r+1 <= k <= n (" + idx_str(*this) + ")");
  const int qmax = (design == Design::Rotational) ? k - (r + 1) : k - r;
  const char* dname = (design == Design::Rotational) ? "rotational" : "vertical";
  const char* bound = (design == Design::Rotational) ? "k-(r+1)" : "k-r";
  if (!(0 <= j && j <= qmax))
    throw std::domain_error(std::string("indices: ") + dname + " design needs 0 <= j <= " +
                            bound + " (" + idx_str(*this) + ")");
  if (!(j <= q && q <= qmax))
    throw std::domain_error(std::string("indices: ") + dname + " design needs j <= q <= " +
                            bound + " (" + idx_str(*this) + ")");
}

double EstimatorSpec::effective_radius() const {
  if (reference_radius > 0.0) return reference_radius;
  return body.circumradius() * (1.0 + 1e-9);
}

void EstimatorSpec::validate(Design design) const {
  idx.validate(design);
  if (body.ambient() != idx.n)
    throw std::domain_error("spec: body ambient dimension differs from n");
  if (fixed_subspace.ambient() != idx.n)
    throw std::domain_error("spec: fixed subspace ambient dimension differs from n");
  if (fixed_subspace.dim() != idx.r)
    throw std::domain_error("spec: fixed subspace dimension must equal r");
  if (reference_radius > 0.0 && reference_radius < body.circumradius())
    throw std::domain_error("spec: reference radius below the body circumradius");
  if (outer_samples < 1 || inner_samples < 1)
    throw std::domain_error("spec: sample counts must be positive");
}

Estimate measurement_phi(const EstimatorSpec& spec, const Subspace& L, RngStream& rng) {
  const Indices& ix = spec.idx;
  const int m = ix.q - ix.j;
  const double c0 = c0_const(ix.n, ix.k, ix.q, ix.r, ix.j);
  const double R = spec.effective_radius();
  Accumulator acc;
  for (long long s = 0; s < spec.inner_samples; ++s) {
    HitFlat hf = sample_hitting_flat(L, ix.q, R, rng);
    double val = 0.0;
    if (auto sec = section(spec.body, hf.flat)) {
      double v = section_intrinsic_volume(*sec, m, rng);
      if (v != 0.0) {
        double w = (ix.n == ix.k)
                       ? 1.0
                       : pow_weight(d_weight(hf.flat, spec.fixed_subspace), ix.n - ix.k);
        val = c0 * v * w * hf.weight;
      }
    }
    acc.add(val);
  }
  return acc.estimate(spec.seed);
}

Estimate measurement_phi_volume(const EstimatorSpec& spec, const Subspace& L, RngStream& rng) {
  const Indices& ix = spec.idx;
  if (ix.j != 0) throw std::domain_error("measurement_phi_volume: requires j = 0");
  const double pref = omega(ix.n - ix.r) / omega(ix.k - ix.r);
  Accumulator acc;
  Vec lo, hi;
  if (!support_box(spec.body, L.frame(), lo, hi)) {
    for (long long s = 0; s < spec.inner_samples; ++s) acc.add(0.0);
    return acc.estimate(spec.seed);
  }
  double boxvol = 1.0;
  for (std::size_t i = 0; i < lo.size(); ++i) boxvol *= hi[i] - lo[i];
  Vec t(lo.size());
  for (long long s = 0; s < spec.inner_samples; ++s) {
    for (std::size_t i = 0; i < t.size(); ++i)
      t[i] = lo[i] + (hi[i] - lo[i]) * rng.next_double();
    Vec x = L.embed(t);
    double val = 0.0;
    if (spec.body.contains(x))
      val = pref * boxvol *
            pow_weight(dist_point_subspace(x, spec.fixed_subspace), ix.n - ix.k);
    acc.add(val);
  }
  return acc.estimate(spec.seed);
}

Estimate measurement_phi_projection(const EstimatorSpec& spec, const Subspace& L,
                                    RngStream& rng) {
  const Indices& ix = spec.idx;
  if (ix.q != ix.j) throw std::domain_error("measurement_phi_projection: requires q = j");
  const double c0 = c0_const(ix.n, ix.k, ix.j, ix.r, ix.j);
  const int n = ix.n, k = ix.k;
  Accumulator acc;
  for (long long s = 0; s < spec.inner_samples; ++s) {
    // M ~ nu_j^L, then z uniform in a support box of the projection
    // (K cap L)|M^perp within L
    Subspace msub = sample_grassmannian(k, ix.j, rng);
    std::vector<Vec> mframe;
    for (int i = 0; i < ix.j; ++i) mframe.push_back(L.embed(msub.basis(i)));
    Subspace M(n, mframe);
    std::vector<Vec> comp_coords = complement_frame(msub);
    std::vector<Vec> comp;
    for (const Vec& c : comp_coords) comp.push_back(L.embed(c));
    Vec lo, hi;
    if (!support_box(spec.body, comp, lo, hi)) {
      acc.add(0.0);
      continue;
    }
    double boxvol = 1.0;
    for (std::size_t i = 0; i < lo.size(); ++i) boxvol *= hi[i] - lo[i];
    Vec z = zeros(n);
    for (std::size_t i = 0; i < comp.size(); ++i)
      axpy(lo[i] + (hi[i] - lo[i]) * rng.next_double(), comp[i], z);
    double val = 0.0;
    if (section_nonempty(spec.body, Flat(M, z))) {
      if (n == k) {
        val = c0 * boxvol;
      } else {
        Subspace ml0 = span_union(M, spec.fixed_subspace);
        val = c0 * boxvol * pow_weight(subspace_det(M, spec.fixed_subspace), n - k) *
              pow_weight(norm(ml0.reject(z)), n - k);
      }
    }
    acc.add(val);
  }
  return acc.estimate(spec.seed);
}

Estimate measurement_phi_radial(const EstimatorSpec& spec, const Subspace& L, RngStream& rng) {
  const Indices& ix = spec.idx;
  if (ix.j != 0) throw std::domain_error("measurement_phi_radial: requires j = 0");
  if (!spec.body.contains(zeros(ix.n)))
    throw std::domain_error("measurement_phi_radial: body must contain the origin");
  const double pref = omega(ix.n - ix.r) / (ix.n * omega(ix.k - ix.r)) * omega(ix.k);
  Accumulator acc;
  for (long long s = 0; s < spec.inner_samples; ++s) {
    Vec u = L.embed(uniform_on_sphere(ix.k, rng));
    double w = (ix.n == ix.k)
                   ? 1.0
                   : pow_weight(dist_point_subspace(u, spec.fixed_subspace), ix.n - ix.k);
    // the radial function of K cap L along u in L equals that of K itself
    double rho = radial_distance(spec.body, u);
    acc.add(pref * w * std::pow(rho, ix.n));
  }
  return acc.estimate(spec.seed);
}

Estimate measurement_by_route(const EstimatorSpec& spec, const Subspace& L, PhiRoute route,
                              RngStream& rng) {
  switch (route) {
    case PhiRoute::Generic:
      return measurement_phi(spec, L, rng);
    case PhiRoute::Volume:
      return measurement_phi_volume(spec, L, rng);
    case PhiRoute::Projection:
      return measurement_phi_projection(spec, L, rng);
    case PhiRoute::Radial:
      return measurement_phi_radial(spec, L, rng);
  }
  throw std::logic_error("measurement_by_route: unknown route");
}

Estimate rotational_crofton_estimate(const EstimatorSpec& spec, PhiRoute route, int jobs) {
  spec.validate(Design::Rotational);
  const long long chunks = (spec.outer_samples + kOuterChunk - 1) / kOuterChunk;
  RngStream root(spec.seed);
  auto accs = run_chunked<Accumulator>(chunks, jobs, [&](long long c) {
    RngStream rng = root.substream(static_cast<std::uint64_t>(c));
    Accumulator a;
    const long long begin = c * kOuterChunk;
    const long long end = std::min(spec.outer_samples, begin + kOuterChunk);
    for (long long i = begin; i < end; ++i) {
      Subspace L = sample_grassmannian_containing(spec.fixed_subspace, spec.idx.k, rng);
      a.add(measurement_by_route(spec, L, route, rng).mean);
    }
    return a;
  });
  Accumulator total;
  for (const Accumulator& a : accs) total.merge(a);
  return total.estimate(spec.seed);
}

Estimate vertical_measurement_tilde(const EstimatorSpec& spec, const Subspace& L, const Vec& x,
                                    RngStream& rng) {
  const Indices& ix = spec.idx;
  const int m = ix.q - ix.j;
  const double lead = d_const(ix.n, ix.k, ix.r, ix.j, ix.q);
  const double R = spec.effective_radius();
  Accumulator acc;
  // flats inside L + x can only meet K within the ball of this radius
  const double rho2 = R * R - norm2(x);
  if (rho2 <= 0.0) {
    for (long long s = 0; s < spec.inner_samples; ++s) acc.add(0.0);
    return acc.estimate(spec.seed);
  }
  const double rho = std::sqrt(rho2);
  for (long long s = 0; s < spec.inner_samples; ++s) {
    double val = 0.0;
    if (ix.q == ix.k) {
      // single flat L + x with unit weight
      Flat E(L, x);
      if (auto sec = section(spec.body, E)) {
        double v = section_intrinsic_volume(*sec, m, rng);
        double w = (ix.n == ix.k)
                       ? 1.0
                       : pow_weight(subspace_det(L, spec.fixed_subspace), ix.n - ix.k);
        val = lead * v * w;
      }
    } else {
      HitFlat hf = sample_hitting_flat(L, ix.q, rho, rng);
      Flat E(hf.flat.direction(), add(hf.flat.offset(), x));
      if (auto sec = section(spec.body, E)) {
        double v = section_intrinsic_volume(*sec, m, rng);
        if (v != 0.0) {
          double w = (ix.n == ix.k) ? 1.0
                                    : pow_weight(subspace_det(E.direction(),
                                                              spec.fixed_subspace),
                                                 ix.n - ix.k);
          val = lead * v * w * hf.weight;
        }
      }
    }
    acc.add(val);
  }
  return acc.estimate(spec.seed);
}

Estimate vertical_sections_estimate(const EstimatorSpec& spec, int jobs) {
  spec.validate(Design::Vertical);
  const long long chunks = (spec.outer_samples + kOuterChunk - 1) / kOuterChunk;
  const double R = spec.effective_radius();
  RngStream root(spec.seed);
  auto accs = run_chunked<Accumulator>(chunks, jobs, [&](long long c) {
    RngStream rng = root.substream(static_cast<std::uint64_t>(c));
    Accumulator a;
    const long long begin = c * kOuterChunk;
    const long long end = std::min(spec.outer_samples, begin + kOuterChunk);
    for (long long i = begin; i < end; ++i) {
      Subspace L = sample_grassmannian_containing(spec.fixed_subspace, spec.idx.k, rng);
      Vec x = zeros(spec.idx.n);
      double wx = 1.0;
      if (spec.idx.k < spec.idx.n) {
        BallTranslate tr = sample_translate_in_complement(L, R, rng);
        x = std::move(tr.offset);
        wx = tr.weight;
      }
      a.add(wx * vertical_measurement_tilde(spec, L, x, rng).mean);
    }
    return a;
  });
  Accumulator total;
  for (const Accumulator& a : accs) total.merge(a);
  return total.estimate(spec.seed);
}

}  // namespace crofton
