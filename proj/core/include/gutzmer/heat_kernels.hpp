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

#include <complex>
#include <vector>

#include "gutzmer/report.hpp"
#include "gutzmer/space_model.hpp"

namespace gutzmer {

struct SeriesValue {
  std::complex<double> value;
  double tail_bound = 0.0;
};

/// gamma_t(z) = sum_lambda d_lambda e^{-t a_lambda} phi_lambda(z) through
/// lambda = lmax, with the circle's +-n pair counted twice. The tail bound
/// uses |phi_lambda(u exp H)| <= e^{lambda |H|}. Throws TruncationInsufficient
/// when the tail exceeds 1e-10 of the partial sum.
SeriesValue compact_heat_kernel(const SpaceModel& space, double t,
                                const ComplexPoint& z, int lmax);

/// gamma^1_tau(r), the heat kernel of the dual space Y at radius r and time
/// tau, normalized by int_Y gamma^1_tau psi_mu dm_1 = e^{-tau(mu^2 + rho^2)}.
double dual_heat_kernel(const SpaceModel& space, double tau, double r);

/// m-th derivative in tau of gamma^1_tau(r).
double dual_heat_kernel_dt(const SpaceModel& space, double tau, double r, int m);

/// Derivatives 0..mmax of gamma^1_tau(r), each multiplied by e^{r^2/(4 tau)}.
/// The scaling keeps every entry O(1) in the far field. Closed form on the
/// circle and SU(2); on the sphere the derivatives are taken under the descent
/// integral and evaluated by Gauss-Legendre doubling (rtol 1e-13).
std::vector<double> dual_heat_kernel_scaled(const SpaceModel& space, double tau,
                                            double r, int mmax);

/// Enables or disables the process-wide memo cache used for the sphere's
/// descent integral. Enabled by default; safe under concurrent readers.
void set_kernel_cache_enabled(bool enabled);
void clear_kernel_cache();

enum class WeightFamily { PT, WM, WM_DELTA, WM_BIG, W_NEG };

std::string_view to_string(WeightFamily family);

/// A radial weight on the complexified chamber.
///   PT        gamma^1_{2t}(2H)
///   WM        (1 + L)^m gamma^1
///   WM_DELTA  delta gamma^1 + L^m gamma^1
///   WM_BIG    gamma^1 + WM_DELTA
///   W_NEG     (1/Gamma(s)) int_0^{2t} (2t-r)^{s-1} e^{r(1+rho^2)} gamma^1_r(2H) dr
/// L = rho^2 + d/dtau acts on tau -> gamma^1_tau(2H) at tau = 2t; under the
/// spherical transform it is multiplication by a_lambda = |lambda + rho|^2.
struct WeightFunction {
  WeightFamily family = WeightFamily::PT;
  double t = 0.1;
  double m_or_s = 0.0;
  double delta = 0.0;
  SpaceModel space = make_space(SpaceKind::Circle);
};

struct WeightValue {
  double value = 0.0;
  bool low_confidence = false;
};

/// w(H) multiplied by e^{H^2/(2t)}.
WeightValue weight_eval_scaled(const WeightFunction& w, double h);
/// w(H).
WeightValue weight_eval(const WeightFunction& w, double h);

/// m-th power of L applied to tau -> gamma^1_tau(r), scaled by e^{r^2/(4 tau)}.
double shifted_dt_scaled(const SpaceModel& space, double tau, double r, int m);

struct DeltaStar {
  double delta = 0.0;
  double argmax_h = 0.0;      // where -L^m p_t / p_t is largest
  double margin = 0.0;        // min over the grid of (delta + L^m) p_t / p_t
  double grid_extent = 0.0;
};

/// Smallest delta with delta p_t + L^m p_t >= 0 on [0, 12 sqrt(2t)].
/// Throws NotFound when delta would exceed 1e6.
DeltaStar find_delta_star(const SpaceModel& space, double t, int m);

/// gamma^1_t(r) against Phi(r)^{1/2} e^{-t rho^2} e^{-r^2/(4t)} on grid.
VerificationReport ao_envelope_check(const SpaceModel& space, double t,
                                     const std::vector<double>& grid);

}  // namespace gutzmer
