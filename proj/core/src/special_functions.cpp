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

#include "gutzmer/special_functions.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "gutzmer/quadrature.hpp"

namespace gutzmer {
namespace {

constexpr double kPi = std::numbers::pi;

double log_cosh(double x) {
  const double a = std::abs(x);
  return a + std::log1p(std::exp(-2.0 * a)) - std::numbers::ln2;
}

// log(sinh(a)) for a > 0 without overflow or cancellation.
double log_sinh(double a) { return a + std::log(-std::expm1(-2.0 * a)) - std::numbers::ln2; }

double sinhc(double x) { return std::abs(x) < 1e-5 ? 1.0 + x * x / 6.0 : std::sinh(x) / x; }

void check_slot(const SpaceModel& space, int lambda, int j) {
  if (lambda < 0) throw IndexOutOfRange("negative lambda");
  if (j < 1 || j > slot_count(space, lambda)) {
    throw IndexOutOfRange("slot j=" + std::to_string(j) + " outside 1.." +
                          std::to_string(slot_count(space, lambda)) +
                          " for lambda " + std::to_string(lambda));
  }
}

// Fills Schmidt semi-normalized real solid harmonics of degree <= lmax at the
// complex vector (x, y, z), z-axis zonal, in SlotLayout order.
void solid_harmonics(int lmax, const std::array<cplx, 3>& v, std::span<cplx> out) {
  const cplx x = v[0], y = v[1], z = v[2];
  const cplx r2 = x * x + y * y + z * z;
  auto slot = [](int l, int j) { return static_cast<std::size_t>(l) * l + (j - 1); };
  cplx cm = 1.0, sm = 0.0;  // sectoral N_m^m, cosine and sine parts
  for (int m = 0; m <= lmax; ++m) {
    if (m > 0) {
      const double f = std::sqrt((2.0 * m - 1.0) / (2.0 * m));
      const cplx c_next = f * (x * cm - y * sm);
      const cplx s_next = f * (y * cm + x * sm);
      cm = c_next;
      sm = s_next;
    }
    const double norm = m == 0 ? 1.0 : std::numbers::sqrt2;
    cplx c_prev = 0.0, s_prev = 0.0, c_cur = cm, s_cur = sm;
    for (int l = m; l <= lmax; ++l) {
      if (m == 0) {
        out[slot(l, 1)] = c_cur;
      } else {
        out[slot(l, 2 * m)] = norm * c_cur;
        out[slot(l, 2 * m + 1)] = norm * s_cur;
      }
      if (l == lmax) break;
      const double a = (2.0 * l + 1.0);
      const double b = std::sqrt(static_cast<double>(l + m) * (l - m));
      const double d = std::sqrt(static_cast<double>(l - m + 1) * (l + m + 1));
      const cplx c_next = (a * z * c_cur - b * r2 * c_prev) / d;
      const cplx s_next = (a * z * s_cur - b * r2 * s_prev) / d;
      c_prev = c_cur;
      s_prev = s_cur;
      c_cur = c_next;
      s_cur = s_next;
    }
  }
}

cplx mehler_dirichlet(cplx mu, double r) {
  // s = r - v^2 removes the inverse square root at s = r, and
  // cosh r - cosh s = 2 sinh(r - v^2/2) sinh(v^2/2).
  const double vmax = std::sqrt(r);
  auto eval = [&](int n) {
    const QuadratureRule rule = gauss_legendre(n, 0.0, vmax);
    cplx acc = 0.0;
    for (std::size_t i = 0; i < rule.size(); ++i) {
      const double v = rule.nodes[i];
      const double h = 0.5 * v * v;
      const double den = std::sqrt(std::sinh(r - h) * sinhc(h));
      acc += rule.weights[i] * std::cos(mu * (r - v * v)) * (2.0 / den);
    }
    return acc * (std::numbers::sqrt2 / kPi);
  };
  return converge_by_doubling_complex(eval, 64, 1e-12, 1e-300).value;
}

}  // namespace

cplx legendre_p(int l, cplx z) {
  if (l == 0) return 1.0;
  cplx p0 = 1.0, p1 = z;
  for (int k = 1; k < l; ++k) {
    const cplx p2 = ((2.0 * k + 1.0) * z * p1 - static_cast<double>(k) * p0) / (k + 1.0);
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

cplx chebyshev_t(int n, cplx z) {
  if (n == 0) return 1.0;
  cplx t0 = 1.0, t1 = z;
  for (int k = 1; k < n; ++k) {
    const cplx t2 = 2.0 * z * t1 - t0;
    t0 = t1;
    t1 = t2;
  }
  return t1;
}

cplx chebyshev_u(int n, cplx z) {
  if (n == 0) return 1.0;
  cplx u0 = 1.0, u1 = 2.0 * z;
  for (int k = 1; k < n; ++k) {
    const cplx u2 = 2.0 * z * u1 - u0;
    u0 = u1;
    u1 = u2;
  }
  return u1;
}

cplx zonal_spherical(const SpaceModel& space, int lambda, cplx w) {
  switch (space.kind) {
    case SpaceKind::Circle:
      return chebyshev_t(lambda, w);
    case SpaceKind::Sphere2:
      return legendre_p(lambda, w);
    case SpaceKind::Su2Zonal:
      return chebyshev_u(lambda, w) / (lambda + 1.0);
  }
  return 0.0;
}

double zonal_radial(const SpaceModel& space, int lambda, double h) {
  switch (space.kind) {
    case SpaceKind::Circle:
      return std::cosh(lambda * h);
    case SpaceKind::Sphere2:
      return legendre_p(lambda, std::cosh(h)).real();
    case SpaceKind::Su2Zonal: {
      const double a = std::abs(h);
      if (a < 1e-8) return 1.0 + lambda * (lambda + 2.0) * a * a / 6.0;
      return std::sinh((lambda + 1.0) * a) / ((lambda + 1.0) * std::sinh(a));
    }
  }
  return 0.0;
}

double log_zonal_radial(const SpaceModel& space, int lambda, double h) {
  const double a = std::abs(h);
  switch (space.kind) {
    case SpaceKind::Circle:
      return log_cosh(lambda * a);
    case SpaceKind::Sphere2: {
      if (lambda == 0) return 0.0;
      // q_k = P_k(x) / x^k keeps the recurrence bounded.
      const double x = std::cosh(a);
      const double inv_x2 = 1.0 / (x * x);
      double q0 = 1.0, q1 = 1.0;
      for (int k = 1; k < lambda; ++k) {
        const double q2 = ((2.0 * k + 1.0) * q1 - k * q0 * inv_x2) / (k + 1.0);
        q0 = q1;
        q1 = q2;
      }
      return std::log(q1) + lambda * log_cosh(a);
    }
    case SpaceKind::Su2Zonal: {
      if (a < 1e-8 || lambda == 0) return std::log(zonal_radial(space, lambda, a));
      const double n = lambda + 1.0;
      return log_sinh(n * a) - log_sinh(a) - std::log(n);
    }
  }
  return 0.0;
}

std::array<cplx, 3> embed_point(const SpaceModel& space, const ComplexPoint& z) {
  const cplx i(0.0, 1.0);
  switch (space.kind) {
    case SpaceKind::Circle:
      return {cplx(z.u[0], z.h), 0.0, 0.0};
    case SpaceKind::Sphere2: {
      const double al = z.u[0], be = z.u[1], ga = z.u[2];
      cplx x = i * std::sinh(z.h), y = 0.0, w = std::cosh(z.h);
      // R_z(gamma)
      cplx x1 = x * std::cos(ga) - y * std::sin(ga);
      cplx y1 = x * std::sin(ga) + y * std::cos(ga);
      // R_y(beta)
      cplx x2 = x1 * std::cos(be) + w * std::sin(be);
      cplx w2 = -x1 * std::sin(be) + w * std::cos(be);
      // R_z(alpha)
      cplx x3 = x2 * std::cos(al) - y1 * std::sin(al);
      cplx y3 = x2 * std::sin(al) + y1 * std::cos(al);
      return {x3, y3, w2};
    }
    case SpaceKind::Su2Zonal: {
      const double eta = z.u[0], xi = z.u[1];
      const cplx w = std::cos(eta) * cplx(std::cos(xi) * std::cosh(z.h),
                                          std::sin(xi) * std::sinh(z.h));
      return {w, 0.0, 0.0};
    }
  }
  return {};
}

cplx matrix_coefficient(const SpaceModel& space, int lambda, int j,
                        const ComplexPoint& z) {
  check_slot(space, lambda, j);
  switch (space.kind) {
    case SpaceKind::Circle: {
      const cplx arg(z.u[0], z.h);
      const double sign = (j == 1) ? 1.0 : -1.0;
      return std::exp(cplx(0.0, sign * lambda) * arg);
    }
    case SpaceKind::Sphere2: {
      std::vector<cplx> all(static_cast<std::size_t>(lambda + 1) * (lambda + 1));
      solid_harmonics(lambda, embed_point(space, z), all);
      return all[static_cast<std::size_t>(lambda) * lambda + (j - 1)];
    }
    case SpaceKind::Su2Zonal:
      return zonal_spherical(space, lambda, embed_point(space, z)[0]);
  }
  return 0.0;
}

void matrix_coefficients(const SpaceModel& space, int lmax, const ComplexPoint& z,
                         std::span<cplx> out) {
  switch (space.kind) {
    case SpaceKind::Circle: {
      const cplx arg(z.u[0], z.h);
      const cplx step = std::exp(cplx(0.0, 1.0) * arg);
      const cplx back = std::exp(cplx(0.0, -1.0) * arg);
      cplx plus = 1.0, minus = 1.0;
      out[0] = 1.0;
      for (int n = 1; n <= lmax; ++n) {
        plus *= step;
        minus *= back;
        out[2 * n - 1] = plus;
        out[2 * n] = minus;
      }
      return;
    }
    case SpaceKind::Sphere2:
      solid_harmonics(lmax, embed_point(space, z), out);
      return;
    case SpaceKind::Su2Zonal: {
      const cplx w = embed_point(space, z)[0];
      cplx u0 = 1.0, u1 = 2.0 * w;
      out[0] = 1.0;
      for (int l = 1; l <= lmax; ++l) {
        out[l] = u1 / (l + 1.0);
        const cplx u2 = 2.0 * w * u1 - u0;
        u0 = u1;
        u1 = u2;
      }
      return;
    }
  }
}

void matrix_coefficients_scaled(const SpaceModel& space, int lmax,
                                const ComplexPoint& z, double log_scale,
                                std::span<cplx> out) {
  const double h = std::abs(z.h);
  switch (space.kind) {
    case SpaceKind::Circle: {
      out[0] = std::exp(-log_scale);
      for (int n = 1; n <= lmax; ++n) {
        const double ph = n * z.u[0];
        const double ex = n * z.h;
        out[2 * n - 1] = std::polar(std::exp(-ex - log_scale), ph);
        out[2 * n] = std::polar(std::exp(ex - log_scale), -ph);
      }
      return;
    }
    case SpaceKind::Sphere2: {
      // Solid harmonics are homogeneous: evaluate at e^{-h} v, then restore.
      auto v = embed_point(space, z);
      const double shrink = std::exp(-h);
      for (auto& c : v) c *= shrink;
      solid_harmonics(lmax, v, out);
      for (int l = 0; l <= lmax; ++l) {
        const double f = std::exp(l * h - log_scale);
        for (int j = 0; j < 2 * l + 1; ++j) out[static_cast<std::size_t>(l) * l + j] *= f;
      }
      return;
    }
    case SpaceKind::Su2Zonal: {
      // U_l(w) e^{-l h} obeys a bounded recurrence.
      const cplx w = embed_point(space, z)[0];
      const double e1 = std::exp(-h), e2 = e1 * e1;
      cplx u0 = 1.0, u1 = 2.0 * w * e1;
      out[0] = std::exp(-log_scale);
      for (int l = 1; l <= lmax; ++l) {
        out[l] = u1 * std::exp(l * h - log_scale) / (l + 1.0);
        const cplx u2 = 2.0 * w * e1 * u1 - e2 * u0;
        u0 = u1;
        u1 = u2;
      }
      return;
    }
  }
}

double slot_radial_factor(const SpaceModel& space, int lambda, int j, double h) {
  if (space.kind == SpaceKind::Circle) {
    return std::exp((j == 1 ? -2.0 : 2.0) * lambda * h);
  }
  return zonal_radial(space, lambda, 2.0 * h);
}

double log_slot_radial_factor(const SpaceModel& space, int lambda, int j, double h) {
  if (space.kind == SpaceKind::Circle) return (j == 1 ? -2.0 : 2.0) * lambda * h;
  return log_zonal_radial(space, lambda, 2.0 * h);
}

cplx dual_spherical(const SpaceModel& space, cplx mu, double r) {
  if (r == 0.0) return 1.0;
  switch (space.kind) {
    case SpaceKind::Circle:
      return std::cos(mu * r);
    case SpaceKind::Sphere2:
      return mehler_dirichlet(mu, r);
    case SpaceKind::Su2Zonal: {
      if (std::abs(mu) == 0.0) return r / std::sinh(r);
      return std::sin(mu * r) / (mu * std::sinh(r));
    }
  }
  return 0.0;
}

}  // namespace gutzmer
