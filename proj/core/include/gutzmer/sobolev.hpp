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
#include <functional>
#include <span>
#include <vector>

#include "gutzmer/heat_kernels.hpp"
#include "gutzmer/transform.hpp"

namespace gutzmer {

/// sum_lambda d_lambda (1 + a_lambda)^s sum_j |c_j(lambda)|^2
double sobolev_norm_sq(const SpectralCoeffs& coeffs, double s);

/// sum_lambda d_lambda (sum_j |F~_j|^2) (1 + a)^s e^{-2 t a} with the
/// normalized holomorphic coefficients F~ = e^{t a} f_hat read off the image.
double holo_sobolev_norm_sq(const BargmannImage& image, double s);

/// Same functional from holomorphic coefficients already divided by the
/// measure constant.
double holo_sobolev_norm_sq(const SpectralCoeffs& holo, double t, double s);

/// Evaluates several holomorphic functions at one point, each scaled by
/// e^{-log_scale}; out has one entry per function.
using HoloBatch =
    std::function<void(const ComplexPoint& z, double log_scale, std::span<cplx> out)>;

HoloBatch holo_batch(std::vector<HoloFunction> fs);
/// Images of one space sharing each basis evaluation. All images must have
/// the same space and lmax.
HoloBatch holo_batch_from_images(const std::vector<BargmannImage>& images);

struct BergmanOptions {
  int orbit_lmax = 16;       // bandlimit of the U-orbit rule
  int radial_band = -1;      // bandwidth for the radial extent, default orbit_lmax
  int radial_nodes0 = 48;
  double rtol = 1e-10;
};

struct BergmanResult {
  double value = 0.0;
  double positive_part = 0.0;  // integral of |F|^2 max(w, 0)
  double negative_part = 0.0;  // integral of |F|^2 max(-w, 0)
  bool signed_weight = false;  // w took negative values on the rule
  int radial_nodes = 0;
  double radial_extent = 0.0;
  bool low_confidence = false;
};

/// int_{X_C} |F|^2 w dm as int [mean over U of |F(u exp H)|^2] w(H) J1(2H) dH
/// (over all of R on the circle). All weights must share t.
std::vector<std::vector<BergmanResult>> bergman_norms(
    const SpaceModel& space, const HoloBatch& batch, std::size_t count,
    const std::vector<WeightFunction>& weights, const BergmanOptions& opts);

BergmanResult bergman_norm_sq(const SpaceModel& space, const HoloFunction& f,
                              const WeightFunction& w, const BergmanOptions& opts);

/// (F, G) = int_{X_C} F conj(G) p_t dm.
cplx duality_pairing(const SpaceModel& space, const HoloFunction& f,
                     const HoloFunction& g, double t, const BergmanOptions& opts,
                     bool* low_confidence = nullptr);

enum class Membership { Converged, Growing, Inconclusive };

std::string_view to_string(Membership m);

struct MembershipResult {
  double norm_estimate = 0.0;     // partial sum through lmax
  double tail_slope = 0.0;        // fitted power of the terms in lambda
  std::vector<double> partial_sums;
  Membership verdict = Membership::Inconclusive;
};

/// Partial sums of the Sobolev functional from normalized holomorphic
/// coefficients. Terms of a convergent series fall faster than lambda^{-1};
/// the power p fitted over the upper half of the bands decides:
/// p < -1.2 or vanishing terms -> CONVERGED, p > -0.8 -> GROWING.
MembershipResult membership_test(const SpectralCoeffs& holo, double t, double s);

/// Computes the holomorphic coefficients of F by quadrature first.
MembershipResult membership_test(const SpaceModel& space, const HoloFunction& f,
                                 double s, double t, int lmax,
                                 const HoloCoeffOptions& opts = {});

}  // namespace gutzmer
