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

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

#include "gutzmer/space_model.hpp"

namespace gutzmer {

enum class DomainTag { Interval, Periodic, HalflineGaussian };

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  DomainTag domain = DomainTag::Interval;

  std::size_t size() const { return nodes.size(); }

  template <class F>
  auto apply(F&& f) const -> decltype(f(0.0)) {
    decltype(f(0.0)) acc{};
    for (std::size_t i = 0; i < nodes.size(); ++i) acc += weights[i] * f(nodes[i]);
    return acc;
  }
};

/// n-point Gauss-Legendre rule on [a, b]. Rules are cached per n.
QuadratureRule gauss_legendre(int n, double a, double b);

/// n-point Gauss-Jacobi rule on [a, b] for the weight (b - x)^alpha (x - a)^beta,
/// alpha, beta > -1. Nodes and weights come from the Golub-Welsch eigenproblem.
QuadratureRule gauss_jacobi(int n, double alpha, double beta, double a, double b);

/// n equispaced nodes on [0, 2 pi) with weight 2 pi / n.
QuadratureRule periodic_trapezoid(int n);

/// Gauss-Legendre rule on [0, R] with R = sigma_mult * sqrt(2t).
QuadratureRule halfline_gaussian(double t, double sigma_mult, int n);

/// Upper limit of radial integrals against p_t for data of bandwidth lmax.
/// The integrand of slot lambda peaks near H = 2t(lambda + rho) with width
/// sqrt(t); the default 12 sqrt(2t) is widened to cover the band.
double radial_extent(const SpaceModel& space, double t, int lmax);

/// Doubling cap, GUTZMER_MAX_NODES or 16384.
int max_nodes();

struct Converged {
  double value = 0.0;
  int nodes = 0;
  bool low_confidence = false;
};

/// Evaluates eval(n) for n = n0, 2 n0, ... until two successive values agree
/// to rtol (relative, with an absolute floor atol) or n exceeds max_nodes().
Converged converge_by_doubling(const std::function<double(int)>& eval, int n0,
                               double rtol, double atol = 0.0);

/// Complex-valued variant; convergence is judged on the modulus of the change.
struct ConvergedComplex {
  std::complex<double> value{};
  int nodes = 0;
  bool low_confidence = false;
};
ConvergedComplex converge_by_doubling_complex(
    const std::function<std::complex<double>(int)>& eval, int n0, double rtol,
    double atol = 0.0);

/// A product rule on U for normalized Haar measure. points hold the
/// ComplexPoint::u coordinates.
struct OrbitRule {
  std::vector<std::array<double, 3>> points;
  std::vector<double> weights;
  std::size_t size() const { return points.size(); }
};

/// Rule on U that integrates |F(u exp H)|^2 exactly when F is bandlimited to
/// lambda <= lmax.
OrbitRule orbit_rule(const SpaceModel& space, int lmax);

/// SO(3) Euler grid: n_alpha x n_beta x n_gamma, trapezoid in alpha and
/// gamma, Gauss-Legendre in cos(beta).
OrbitRule euler_grid(int n_alpha, int n_beta, int n_gamma);

/// Normalized Haar integral over U using orbit_rule(space, lmax).
template <class F>
auto integrate_U(const SpaceModel& space, F&& f, int lmax) {
  const OrbitRule rule = orbit_rule(space, lmax);
  decltype(f(rule.points[0])) acc{};
  for (std::size_t i = 0; i < rule.size(); ++i) acc += rule.weights[i] * f(rule.points[i]);
  return acc;
}

/// Integral of a class function on SU(2) by Weyl integration,
/// (2/pi) int_0^pi sin^2(theta) f(theta) d theta, exact for trigonometric
/// polynomials of degree < 2n - 2.
double integrate_class_su2(const std::function<double(double)>& f, int n);

/// Deterministic point set in [0,1)^d from the Halton sequence (bases 2,3,5).
std::vector<std::array<double, 3>> halton_points(std::size_t count);

}  // namespace gutzmer
