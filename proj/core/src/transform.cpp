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

#include "gutzmer/transform.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gutzmer/heat_kernels.hpp"
#include "gutzmer/quadrature.hpp"
#include "gutzmer/report.hpp"

namespace gutzmer {
namespace {

constexpr double kPi = std::numbers::pi;

struct SamplePoint {
  ComplexPoint x;
  double weight;
};

// Real points of X with normalized weights, refined by level n.
std::vector<SamplePoint> real_rule(const SpaceModel& space, int n) {
  std::vector<SamplePoint> pts;
  switch (space.kind) {
    case SpaceKind::Circle:
      for (int i = 0; i < n; ++i) {
        pts.push_back({{{2.0 * kPi * i / n, 0.0, 0.0}, 0.0}, 1.0 / n});
      }
      break;
    case SpaceKind::Sphere2: {
      const QuadratureRule beta = gauss_legendre(n, -1.0, 1.0);
      const int na = 2 * n;
      for (int i = 0; i < na; ++i) {
        for (std::size_t j = 0; j < beta.size(); ++j) {
          pts.push_back({{{2.0 * kPi * i / na, std::acos(beta.nodes[j]), 0.0}, 0.0},
                         0.5 * beta.weights[j] / na});
        }
      }
      break;
    }
    case SpaceKind::Su2Zonal: {
      const QuadratureRule th = gauss_legendre(n, 0.0, kPi);
      for (std::size_t j = 0; j < th.size(); ++j) {
        const double s = std::sin(th.nodes[j]);
        pts.push_back({{{0.0, th.nodes[j], 0.0}, 0.0}, 2.0 / kPi * s * s * th.weights[j]});
      }
      break;
    }
  }
  return pts;
}

}  // namespace

SpectralCoeffs::SpectralCoeffs(const SpaceModel& space, int lmax)
    : space_(space), layout_(space, lmax), data_(layout_.size()) {}

double SpectralCoeffs::band_norm_sq(int lambda) const {
  double acc = 0.0;
  const std::size_t off = layout_.offset(lambda);
  for (int j = 0; j < layout_.slots(lambda); ++j) acc += std::norm(data_[off + j]);
  return acc;
}

HoloFunction holo_from_plain(std::function<cplx(const ComplexPoint&)> f) {
  return [f = std::move(f)](const ComplexPoint& z, double log_scale) {
    return f(z) * std::exp(-log_scale);
  };
}

HoloFunction holo_from_image(const BargmannImage& image) {
  return [image](const ComplexPoint& z, double log_scale) {
    return holo_eval_scaled(image, z, log_scale);
  };
}

SpectralCoeffs analyze(const SpaceModel& space,
                       const std::function<cplx(const ComplexPoint&)>& f, int lmax,
                       AnalyzeInfo* info, double rtol) {
  SpectralCoeffs prev(space, lmax);
  const std::size_t size = prev.data().size();
  std::vector<cplx> basis(size);
  int n = space.kind == SpaceKind::Circle ? std::max(16, 4 * (lmax + 1)) : std::max(8, lmax + 2);
  const int cap = max_nodes();
  auto run = [&](int level, SpectralCoeffs& out, double& norm) {
    std::fill(out.data().begin(), out.data().end(), cplx(0.0));
    norm = 0.0;
    for (const SamplePoint& p : real_rule(space, level)) {
      const cplx fx = f(p.x);
      norm += p.weight * std::norm(fx);
      matrix_coefficients(space, lmax, p.x, basis);
      for (std::size_t k = 0; k < size; ++k) out.data()[k] += p.weight * fx * std::conj(basis[k]);
    }
  };
  double prev_norm = 0.0;
  run(n, prev, prev_norm);
  bool converged = false;
  while (2 * n <= cap) {
    n *= 2;
    SpectralCoeffs cur(space, lmax);
    double cur_norm = 0.0;
    run(n, cur, cur_norm);
    double diff = 0.0;
    for (std::size_t k = 0; k < size; ++k) diff = std::max(diff, std::abs(cur.data()[k] - prev.data()[k]));
    diff = std::max(diff, std::abs(cur_norm - prev_norm));
    prev = std::move(cur);
    prev_norm = cur_norm;
    if (diff <= rtol * std::max(std::sqrt(cur_norm), 1e-300)) {
      converged = true;
      break;
    }
  }
  if (info) {
    double planch = 0.0;
    for (int l = 0; l <= lmax; ++l) planch += dimension(space, l) * prev.band_norm_sq(l);
    info->norm_sq = prev_norm;
    info->plancherel_defect = prev_norm - planch;
    info->nodes = n;
    info->low_confidence = !converged;
  }
  return prev;
}

cplx synthesize(const SpectralCoeffs& coeffs, const ComplexPoint& x) {
  const SpaceModel& space = coeffs.space();
  std::vector<cplx> basis(coeffs.data().size());
  matrix_coefficients(space, coeffs.lmax(), x, basis);
  cplx acc = 0.0;
  for (int l = 0; l <= coeffs.lmax(); ++l) {
    const std::size_t off = coeffs.layout().offset(l);
    cplx band = 0.0;
    for (int j = 0; j < coeffs.layout().slots(l); ++j) band += coeffs.data()[off + j] * basis[off + j];
    acc += static_cast<double>(dimension(space, l)) * band;
  }
  return acc;
}

BargmannImage bargmann_forward(const SpectralCoeffs& coeffs, double t) {
  if (!(t > 0.0)) throw std::invalid_argument("bargmann_forward: t must be > 0");
  BargmannImage img{coeffs, t, true};
  for (int l = 0; l <= coeffs.lmax(); ++l) {
    const double f = std::exp(-t * eigenvalue(coeffs.space(), l));
    const std::size_t off = coeffs.layout().offset(l);
    for (int j = 0; j < coeffs.layout().slots(l); ++j) img.coeffs.data()[off + j] *= f;
  }
  return img;
}

cplx holo_eval_scaled(const BargmannImage& image, const ComplexPoint& z,
                      double log_scale) {
  const SpectralCoeffs& c = image.coeffs;
  const SpaceModel& space = c.space();
  if (space.kind == SpaceKind::Circle) {
    // Each term in log form so e^{n|h|} never appears on its own.
    cplx acc = 0.0;
    for (int n = 0; n <= c.lmax(); ++n) {
      for (int j = 1; j <= c.layout().slots(n); ++j) {
        const cplx a = c.at(n, j);
        if (a == 0.0) continue;
        const double sgn = j == 1 ? 1.0 : -1.0;
        const double mag = std::log(std::abs(a)) - sgn * n * z.h - log_scale;
        acc += std::polar(std::exp(mag), std::arg(a) + sgn * n * z.u[0]);
      }
    }
    return acc;
  }
  std::vector<cplx> basis(c.data().size());
  matrix_coefficients_scaled(space, c.lmax(), z, log_scale, basis);
  cplx acc = 0.0;
  for (int l = 0; l <= c.lmax(); ++l) {
    const std::size_t off = c.layout().offset(l);
    cplx band = 0.0;
    for (int j = 0; j < c.layout().slots(l); ++j) band += c.data()[off + j] * basis[off + j];
    acc += static_cast<double>(dimension(space, l)) * band;
  }
  return acc;
}

cplx holo_eval(const BargmannImage& image, const ComplexPoint& z) {
  if (!image.bandlimited) {
    const SpectralCoeffs& c = image.coeffs;
    const double h = std::abs(z.h);
    double total = 0.0, last = 0.0;
    for (int l = 0; l <= c.lmax(); ++l) {
      double mag = 0.0;
      const std::size_t off = c.layout().offset(l);
      for (int j = 0; j < c.layout().slots(l); ++j) mag += std::abs(c.data()[off + j]);
      const double term = dimension(c.space(), l) * mag * std::exp(l * h);
      total += term;
      if (l == c.lmax()) last = term;
    }
    if (last > 1e-10 * total) {
      throw TruncationInsufficient("Laurent series not resolved at H=" + std::to_string(h) +
                                   " with lmax " + std::to_string(c.lmax()));
    }
  }
  return holo_eval_scaled(image, z, 0.0);
}

double stenzel_constant(const SpaceModel& space, double t) {
  const double fold = space.kind == SpaceKind::Circle ? 2.0 : 1.0;
  return std::exp(-2.0 * t * space.rho * space.rho) * fold / (2.0 * space.dual_measure_constant);
}

SpectralCoeffs holo_fourier_coeffs(const SpaceModel& space, const HoloFunction& f,
                                   double t, int lmax, const HoloCoeffOptions& opts,
                                   HoloCoeffInfo* info) {
  const int orbit_l = opts.orbit_lmax < 0 ? lmax : opts.orbit_lmax;
  const int band = opts.radial_band < 0 ? std::max(lmax, orbit_l) : opts.radial_band;
  const OrbitRule orbit = orbit_rule(space, std::max(orbit_l, lmax));
  const double extent = radial_extent(space, t, band);
  const bool full_line = space.kind == SpaceKind::Circle;
  SpectralCoeffs shape(space, lmax);
  const std::size_t size = shape.data().size();
  std::vector<cplx> basis(size);

  auto radial_value = [&](double h, std::vector<cplx>& acc) {
    const double log_scale = h * h / (4.0 * t);
    std::fill(acc.begin(), acc.end(), cplx(0.0));
    for (std::size_t p = 0; p < orbit.size(); ++p) {
      const ComplexPoint z{orbit.points[p], h};
      const cplx fz = f(z, log_scale);
      if (fz == 0.0) continue;
      matrix_coefficients_scaled(space, lmax, z, log_scale, basis);
      const cplx wf = orbit.weights[p] * fz;
      for (std::size_t k = 0; k < size; ++k) acc[k] += wf * std::conj(basis[k]);
    }
    const double kern = dual_heat_kernel_scaled(space, 2.0 * t, 2.0 * std::abs(h), 0)[0];
    const double jac = jacobian_j1(space, 2.0 * std::abs(h));
    for (auto& v : acc) v *= kern * jac;
  };

  auto integrate = [&](int n, std::vector<cplx>& out) {
    out.assign(size, cplx(0.0));
    const QuadratureRule rule = gauss_legendre(n, 0.0, extent);
    std::vector<cplx> acc(size);
    for (std::size_t i = 0; i < rule.size(); ++i) {
      radial_value(rule.nodes[i], acc);
      for (std::size_t k = 0; k < size; ++k) out[k] += rule.weights[i] * acc[k];
      if (full_line) {
        radial_value(-rule.nodes[i], acc);
        for (std::size_t k = 0; k < size; ++k) out[k] += rule.weights[i] * acc[k];
      }
    }
  };

  std::vector<cplx> prev, cur;
  int n = opts.radial_nodes0;
  integrate(n, prev);
  bool converged = false;
  const int cap = max_nodes();
  while (2 * n <= cap) {
    n *= 2;
    integrate(n, cur);
    double scale = 0.0;
    for (const auto& v : cur) scale = std::max(scale, std::abs(v));
    bool ok = true;
    for (std::size_t k = 0; k < size; ++k) {
      // Orbit sums leave roundoff near 1e-12 of the largest coefficient in
      // slots that vanish exactly.
      if (std::abs(cur[k] - prev[k]) > opts.rtol * std::abs(cur[k]) + 1e-11 * scale) {
        ok = false;
      }
    }
    prev.swap(cur);
    if (ok) {
      converged = true;
      break;
    }
  }
  std::copy(prev.begin(), prev.end(), shape.data().begin());
  if (info) {
    info->radial_nodes = n;
    info->radial_extent = extent;
    info->low_confidence = !converged;
  }
  return shape;
}

}  // namespace gutzmer
