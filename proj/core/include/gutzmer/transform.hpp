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

#include "gutzmer/space_model.hpp"
#include "gutzmer/special_functions.hpp"

namespace gutzmer {

/// Ragged coefficient array c[lambda][j], lambda = 0..lmax, j = 1..slots.
class SpectralCoeffs {
 public:
  SpectralCoeffs(const SpaceModel& space, int lmax);

  const SpaceModel& space() const { return space_; }
  int lmax() const { return layout_.lmax(); }
  const SlotLayout& layout() const { return layout_; }

  cplx& at(int lambda, int j) { return data_[layout_.index(lambda, j)]; }
  const cplx& at(int lambda, int j) const { return data_[layout_.index(lambda, j)]; }

  std::span<cplx> data() { return data_; }
  std::span<const cplx> data() const { return data_; }

  /// sum_j |c[lambda][j]|^2
  double band_norm_sq(int lambda) const;

 private:
  SpaceModel space_;
  SlotLayout layout_;
  std::vector<cplx> data_;
};

/// Coefficients of F = f * gamma_t; c[lambda][j] already carries
/// e^{-t a_lambda}.
/// bandlimited marks coefficient sequences that vanish beyond lmax; otherwise
/// the stored bands are a truncation of an infinite series.
struct BargmannImage {
  SpectralCoeffs coeffs;
  double t;
  bool bandlimited = true;
};

/// A function on X_C evaluated with an exponential scale: returns
/// F(z) e^{-log_scale}. The scale lets callers keep |F|^2 times a Gaussian
/// weight finite where |F| alone would overflow.
using HoloFunction = std::function<cplx(const ComplexPoint& z, double log_scale)>;

/// Wraps an unscaled evaluator.
HoloFunction holo_from_plain(std::function<cplx(const ComplexPoint&)> f);
/// Evaluator of an image's Laurent series (no tail check).
HoloFunction holo_from_image(const BargmannImage& image);

struct AnalyzeInfo {
  double plancherel_defect = 0.0;  // ||f||^2 - sum d |f_hat|^2
  double norm_sq = 0.0;
  int nodes = 0;
  bool low_confidence = false;
};

/// Fourier coefficients of f on X by quadrature, doubling the rule until
/// successive coefficient vectors agree to rtol. On SU(2) f is treated as a
/// class function and sampled on the maximal torus.
SpectralCoeffs analyze(const SpaceModel& space,
                       const std::function<cplx(const ComplexPoint&)>& f, int lmax,
                       AnalyzeInfo* info = nullptr, double rtol = 1e-12);

/// Fourier series sum_lambda d_lambda sum_j c_j phi_j^lambda(x). Accepts any
/// point of X_C.
cplx synthesize(const SpectralCoeffs& coeffs, const ComplexPoint& x);

BargmannImage bargmann_forward(const SpectralCoeffs& coeffs, double t);

/// Laurent series of the image at z. For images that are not bandlimited,
/// throws TruncationInsufficient when the last retained band, weighted by
/// its majorant e^{lambda |H|}, exceeds 1e-10 of the absolute partial sum.
cplx holo_eval(const BargmannImage& image, const ComplexPoint& z);

/// Scaled series value F(z) e^{-log_scale}, no tail check.
cplx holo_eval_scaled(const BargmannImage& image, const ComplexPoint& z,
                      double log_scale);

/// Constant c_t in int |F|^2 p_t dm = c_t ||f||^2 for the normalizations used
/// here: e^{-2 t rho^2} fold / (2 c_1), fold = 2 on the circle whose chamber
/// is all of R.
double stenzel_constant(const SpaceModel& space, double t);

struct HoloCoeffOptions {
  int orbit_lmax = -1;      // bandlimit for the U-orbit rule, default lmax
  int radial_nodes0 = 48;
  double rtol = 1e-10;
  int radial_band = -1;     // bandwidth used to size the radial extent
};

struct HoloCoeffInfo {
  int radial_nodes = 0;
  double radial_extent = 0.0;
  bool low_confidence = false;
};

/// Holomorphic Fourier coefficients int_{X_C} F conj(phi_j^lambda) p_t dm,
/// computed as orbit quadrature times a radial Gauss-Legendre rule. For
/// F = f * gamma_t these equal stenzel_constant(t) e^{t a} f_hat.
SpectralCoeffs holo_fourier_coeffs(const SpaceModel& space, const HoloFunction& f,
                                   double t, int lmax,
                                   const HoloCoeffOptions& opts = {},
                                   HoloCoeffInfo* info = nullptr);

}  // namespace gutzmer
