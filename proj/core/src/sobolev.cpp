// Copyright 2026 The gutzmer Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gutzmer/sobolev.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gutzmer/quadrature.hpp"

namespace gutzmer {
namespace {

struct RadialOutcome {
  std::vector<double> values;
  int nodes = 0;
  bool converged = false;
};

// Gauss-Legendre doubling over [0, R] (or [-R, R]) of a vector integrand.
// Only every stride-th entry (starting at 0) takes part in the convergence
// test; the others ride along.
// graded: nodes H = R x^2 with x Gauss-Legendre on [0, 1], for integrands
// with an integrable log or power singularity at H = 0.
template <class Fn>
RadialOutcome radial_quad(bool full_line, double extent, int n0, double rtol,
                          std::size_t size, Fn&& fn, std::size_t stride = 1,
                          bool graded = false) {
  // The full line is folded onto [0, R] so weights with a kink at H = 0
  // do not sit inside a Gauss-Legendre panel.
  auto integrate = [&](int n) {
    std::vector<double> acc(size, 0.0), tmp(size);
    QuadratureRule rule = gauss_legendre(n, 0.0, graded ? 1.0 : extent);
    if (graded) {
      for (std::size_t i = 0; i < rule.size(); ++i) {
        const double x = rule.nodes[i];
        rule.nodes[i] = extent * x * x;
        rule.weights[i] *= 2.0 * extent * x;
      }
    }
    for (std::size_t i = 0; i < rule.size(); ++i) {
      fn(rule.nodes[i], tmp);
      for (std::size_t k = 0; k < size; ++k) acc[k] += rule.weights[i] * tmp[k];
      if (full_line) {
        fn(-rule.nodes[i], tmp);
        for (std::size_t k = 0; k < size; ++k) acc[k] += rule.weights[i] * tmp[k];
      }
    }
    return acc;
  };
  RadialOutcome out;
  int n = n0;
  out.values = integrate(n);
  const int cap = max_nodes();
  while (2 * n <= cap) {
    n *= 2;
    std::vector<double> cur = integrate(n);
    double scale = 0.0;
    for (std::size_t k = 0; k < size; k += stride) scale = std::max(scale, std::abs(cur[k]));
    bool ok = true;
    for (std::size_t k = 0; k < size; k += stride) {
      if (std::abs(cur[k] - out.values[k]) > rtol * std::abs(cur[k]) + 1e-14 * scale) {
        ok = false;
      }
    }
    out.values.swap(cur);
    if (ok) {
      out.converged = true;
      break;
    }
  }
  out.nodes = n;
  return out;
}

// log sum_j |c_j|^2 for band lambda without squaring large entries;
// -inf for an empty band, +inf or nan passes through.
double log_band_norm_sq(const SpectralCoeffs& c, int lambda) {
  const std::size_t base = c.layout().offset(lambda);
  const int slots = c.layout().slots(lambda);
  double big = 0.0;
  for (int j = 0; j < slots; ++j) big = std::max(big, std::abs(c.data()[base + j]));
  if (big == 0.0) return -INFINITY;
  if (!std::isfinite(big)) return big;
  double rel = 0.0;
  for (int j = 0; j < slots; ++j) rel += std::norm(c.data()[base + j] / big);
  return std::log(rel) + 2.0 * std::log(big);
}

}  // namespace

double sobolev_norm_sq(const SpectralCoeffs& coeffs, double s) {
  double acc = 0.0;
  for (int l = 0; l <= coeffs.lmax(); ++l) {
    const double band = coeffs.band_norm_sq(l);
    if (band == 0.0) continue;
    acc += dimension(coeffs.space(), l) * std::pow(1.0 + eigenvalue(coeffs.space(), l), s) * band;
  }
  return acc;
}

double holo_sobolev_norm_sq(const BargmannImage& image, double s) {
  // F~ = e^{t a} f_hat = e^{2 t a} c, so |F~|^2 e^{-2 t a} = e^{2 t a} |c|^2.
  const SpectralCoeffs& c = image.coeffs;
  double acc = 0.0;
  for (int l = 0; l <= c.lmax(); ++l) {
    const double band = c.band_norm_sq(l);
    if (band == 0.0) continue;
    const double a = eigenvalue(c.space(), l);
    acc += dimension(c.space(), l) * std::pow(1.0 + a, s) *
           std::exp(std::log(band) + 2.0 * image.t * a);
  }
  return acc;
}

double holo_sobolev_norm_sq(const SpectralCoeffs& holo, double t, double s) {
  double acc = 0.0;
  for (int l = 0; l <= holo.lmax(); ++l) {
    const double log_band = log_band_norm_sq(holo, l);
    if (log_band == -INFINITY) continue;
    const double a = eigenvalue(holo.space(), l);
    acc += dimension(holo.space(), l) * std::pow(1.0 + a, s) * std::exp(log_band - 2.0 * t * a);
  }
  return acc;
}

HoloBatch holo_batch(std::vector<HoloFunction> fs) {
  return [fs = std::move(fs)](const ComplexPoint& z, double log_scale, std::span<cplx> out) {
    for (std::size_t i = 0; i < fs.size(); ++i) out[i] = fs[i](z, log_scale);
  };
}

HoloBatch holo_batch_from_images(const std::vector<BargmannImage>& images) {
  if (images.empty()) throw std::invalid_argument("holo_batch_from_images: no images");
  const SpaceModel space = images.front().coeffs.space();
  const int lmax = images.front().coeffs.lmax();
  for (const auto& img : images) {
    if (img.coeffs.space().kind != space.kind || img.coeffs.lmax() != lmax) {
      throw std::invalid_argument("holo_batch_from_images: mixed shapes");
    }
  }
  if (space.kind == SpaceKind::Circle) {
    std::vector<HoloFunction> fs;
    for (const auto& img : images) fs.push_back(holo_from_image(img));
    return holo_batch(std::move(fs));
  }
  // Fold d_lambda into the coefficients once.
  const SlotLayout layout(space, lmax);
  std::vector<std::vector<cplx>> weighted;
  for (const auto& img : images) {
    std::vector<cplx> w(img.coeffs.data().begin(), img.coeffs.data().end());
    for (int l = 0; l <= lmax; ++l) {
      for (int j = 0; j < layout.slots(l); ++j) w[layout.offset(l) + j] *= dimension(space, l);
    }
    weighted.push_back(std::move(w));
  }
  return [space, lmax, weighted = std::move(weighted)](const ComplexPoint& z, double log_scale,
                                                      std::span<cplx> out) {
    thread_local std::vector<cplx> basis;
    basis.resize(weighted.front().size());
    matrix_coefficients_scaled(space, lmax, z, log_scale, basis);
    for (std::size_t i = 0; i < weighted.size(); ++i) {
      cplx acc = 0.0;
      const auto& w = weighted[i];
      for (std::size_t k = 0; k < w.size(); ++k) acc += w[k] * basis[k];
      out[i] = acc;
    }
  };
}

std::vector<std::vector<BergmanResult>> bergman_norms(
    const SpaceModel& space, const HoloBatch& batch, std::size_t count,
    const std::vector<WeightFunction>& weights, const BergmanOptions& opts) {
  if (weights.empty()) throw std::invalid_argument("bergman_norms: no weights");
  const double t = weights.front().t;
  for (const auto& w : weights) {
    if (w.t != t) throw std::invalid_argument("bergman_norms: weights must share t");
  }
  const std::size_t nw = weights.size();
  const OrbitRule orbit = orbit_rule(space, opts.orbit_lmax);
  const int band = opts.radial_band < 0 ? opts.orbit_lmax : opts.radial_band;
  const double extent = radial_extent(space, t, band);
  const bool full_line = space.kind == SpaceKind::Circle;
  bool singular_weight = false;
  for (const auto& w : weights) {
    if (w.family == WeightFamily::W_NEG && space.kind != SpaceKind::Circle) singular_weight = true;
  }
  std::vector<cplx> vals(count);
  std::vector<double> means(count);
  std::vector<char> seen_negative(nw, 0);
  bool weight_low_conf = false;

  // Layout: [(i * nw + k) * 3 + {0: net, 1: positive, 2: negative}]. The
  // split parts have a kink where w changes sign, so only the net value
  // drives convergence.
  auto integrand = [&](double h, std::vector<double>& out) {
    const double log_scale = h * h / (4.0 * t);
    std::fill(means.begin(), means.end(), 0.0);
    for (std::size_t p = 0; p < orbit.size(); ++p) {
      batch(ComplexPoint{orbit.points[p], h}, log_scale, vals);
      for (std::size_t i = 0; i < count; ++i) means[i] += orbit.weights[p] * std::norm(vals[i]);
    }
    const double jac = jacobian_j1(space, 2.0 * std::abs(h));
    for (std::size_t k = 0; k < nw; ++k) {
      const WeightValue wv = weight_eval_scaled(weights[k], h);
      weight_low_conf = weight_low_conf || wv.low_confidence;
      const double w = wv.value * jac;
      if (w < 0.0) seen_negative[k] = 1;
      for (std::size_t i = 0; i < count; ++i) {
        out[(i * nw + k) * 3] = means[i] * w;
        out[(i * nw + k) * 3 + 1] = means[i] * std::max(w, 0.0);
        out[(i * nw + k) * 3 + 2] = means[i] * std::max(-w, 0.0);
      }
    }
  };
  const RadialOutcome r =
      radial_quad(full_line, extent, opts.radial_nodes0, opts.rtol, count * nw * 3, integrand, 3,
                  singular_weight);
  std::vector<std::vector<BergmanResult>> out(count, std::vector<BergmanResult>(nw));
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t k = 0; k < nw; ++k) {
      BergmanResult& b = out[i][k];
      b.value = r.values[(i * nw + k) * 3];
      b.positive_part = r.values[(i * nw + k) * 3 + 1];
      b.negative_part = r.values[(i * nw + k) * 3 + 2];
      b.signed_weight = seen_negative[k] != 0;
      b.radial_nodes = r.nodes;
      b.radial_extent = extent;
      b.low_confidence = !r.converged || weight_low_conf;
    }
  }
  return out;
}

BergmanResult bergman_norm_sq(const SpaceModel& space, const HoloFunction& f,
                              const WeightFunction& w, const BergmanOptions& opts) {
  return bergman_norms(space, holo_batch({f}), 1, {w}, opts)[0][0];
}

cplx duality_pairing(const SpaceModel& space, const HoloFunction& f,
                     const HoloFunction& g, double t, const BergmanOptions& opts,
                     bool* low_confidence) {
  const OrbitRule orbit = orbit_rule(space, opts.orbit_lmax);
  const int band = opts.radial_band < 0 ? opts.orbit_lmax : opts.radial_band;
  const double extent = radial_extent(space, t, band);
  const bool full_line = space.kind == SpaceKind::Circle;
  auto integrand = [&](double h, std::vector<double>& out) {
    const double log_scale = h * h / (4.0 * t);
    cplx acc = 0.0;
    for (std::size_t p = 0; p < orbit.size(); ++p) {
      const ComplexPoint z{orbit.points[p], h};
      acc += orbit.weights[p] * f(z, log_scale) * std::conj(g(z, log_scale));
    }
    const double w = dual_heat_kernel_scaled(space, 2.0 * t, 2.0 * std::abs(h), 0)[0] *
                     jacobian_j1(space, 2.0 * std::abs(h));
    out[0] = acc.real() * w;
    out[1] = acc.imag() * w;
  };
  const RadialOutcome r =
      radial_quad(full_line, extent, opts.radial_nodes0, opts.rtol, 2, integrand);
  if (low_confidence) *low_confidence = !r.converged;
  return {r.values[0], r.values[1]};
}

std::string_view to_string(Membership m) {
  switch (m) {
    case Membership::Converged:
      return "CONVERGED";
    case Membership::Growing:
      return "GROWING";
    case Membership::Inconclusive:
      return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

MembershipResult membership_test(const SpectralCoeffs& holo, double t, double s) {
  const SpaceModel& space = holo.space();
  MembershipResult res;
  std::vector<double> log_terms(holo.lmax() + 1, -INFINITY);
  double sum = 0.0;
  for (int l = 0; l <= holo.lmax(); ++l) {
    // |F~|^2 alone overflows once t a passes ~354
    const double log_band = log_band_norm_sq(holo, l);
    if (std::isnan(log_band) || log_band == INFINITY) {
      res.verdict = Membership::Inconclusive;
      res.norm_estimate = NAN;
      return res;
    }
    if (log_band > -INFINITY) {
      const double a = eigenvalue(space, l);
      log_terms[l] = std::log(dimension(space, l)) + log_band + s * std::log1p(a) - 2.0 * t * a;
      sum += std::exp(log_terms[l]);
    }
    res.partial_sums.push_back(sum);
  }
  if (!std::isfinite(sum)) {
    res.norm_estimate = sum;
    res.verdict = Membership::Inconclusive;
    return res;
  }
  res.norm_estimate = sum;
  // Least-squares slope of log term against log(lambda + 1) on the upper half.
  const int lo = std::max(1, holo.lmax() / 2);
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (int l = lo; l <= holo.lmax(); ++l) {
    if (!std::isfinite(log_terms[l]) || log_terms[l] < std::log(1e-300) ||
        (sum > 0.0 && log_terms[l] < std::log(sum) - 700.0)) {
      continue;
    }
    const double x = std::log(l + 1.0);
    sx += x;
    sy += log_terms[l];
    sxx += x * x;
    sxy += x * log_terms[l];
    ++n;
  }
  if (n < 3) {
    res.tail_slope = -INFINITY;
    res.verdict = Membership::Converged;
    return res;
  }
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  res.tail_slope = slope;
  if (!std::isfinite(slope)) {
    res.verdict = Membership::Inconclusive;
  } else if (slope < -1.2) {
    res.verdict = Membership::Converged;
  } else if (slope > -0.8) {
    res.verdict = Membership::Growing;
  } else {
    res.verdict = Membership::Inconclusive;
  }
  return res;
}

MembershipResult membership_test(const SpaceModel& space, const HoloFunction& f,
                                 double s, double t, int lmax,
                                 const HoloCoeffOptions& opts) {
  SpectralCoeffs raw = holo_fourier_coeffs(space, f, t, lmax, opts);
  const double ct = stenzel_constant(space, t);
  for (auto& v : raw.data()) v /= ct;
  return membership_test(raw, t, s);
}

}  // namespace gutzmer
