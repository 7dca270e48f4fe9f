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

#include <cmath>
#include <numbers>

#include "doctest.h"
#include "gutzmer/diagnostics.hpp"
#include "gutzmer/transform.hpp"

using namespace gutzmer;
using std::numbers::pi;

namespace {

const SpaceModel kCircle = make_space(SpaceKind::Circle);
const SpaceModel kSphere = make_space(SpaceKind::Sphere2);
const SpaceModel kSu2 = make_space(SpaceKind::Su2Zonal);

double max_abs_diff(const SpectralCoeffs& a, const SpectralCoeffs& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i) {
    m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
  }
  return m;
}

}  // namespace

TEST_CASE("stenzel constants") {
  for (double t : {0.1, 0.25, 1.0}) {
    CHECK(stenzel_constant(kCircle, t) == doctest::Approx(0.5));
    CHECK(stenzel_constant(kSphere, t) == doctest::Approx(std::exp(-t / 2) / (4 * pi)));
    CHECK(stenzel_constant(kSu2, t) == doctest::Approx(std::exp(-2 * t) / (8 * pi)));
  }
  CHECK(stenzel_constant(kSphere, 0.25) == doctest::Approx(0.0702269).epsilon(1e-6));
  CHECK(stenzel_constant(kSu2, 0.25) == doctest::Approx(0.0241331).epsilon(1e-6));
}

TEST_CASE("analyze inverts synthesize") {
  for (const auto& sp : {kCircle, kSphere, kSu2}) {
    const auto f = random_coeffs(sp, 7, 11);
    AnalyzeInfo info;
    const auto g = analyze(sp, [&](const ComplexPoint& x) { return synthesize(f, x); }, 7, &info);
    CHECK(max_abs_diff(f, g) < 1e-11);
    CHECK_FALSE(info.low_confidence);
    CHECK(std::abs(info.plancherel_defect) < 1e-9 * info.norm_sq);
  }
}

TEST_CASE("forward transform damps by e^{-t a}") {
  for (const auto& sp : {kCircle, kSphere, kSu2}) {
    const auto f = random_coeffs(sp, 6, 3);
    const auto img = bargmann_forward(f, 0.3);
    CHECK(img.t == 0.3);
    CHECK(img.bandlimited);
    for (int l = 0; l <= 6; ++l) {
      for (int j = 1; j <= img.coeffs.layout().slots(l); ++j) {
        CHECK(std::abs(img.coeffs.at(l, j) - f.at(l, j) * std::exp(-0.3 * eigenvalue(sp, l))) <
              1e-15);
      }
    }
  }
}

TEST_CASE("circle image is a laurent polynomial") {
  auto f = random_coeffs(kCircle, 5, 8);
  const auto img = bargmann_forward(f, 0.2);
  const ComplexPoint z{{1.1, 0, 0}, -0.7};
  const cplx w(1.1, -0.7);
  cplx ref = f.at(0, 1);
  for (int n = 1; n <= 5; ++n) {
    const double damp = std::exp(-0.2 * n * n);
    ref += damp * (f.at(n, 1) * std::exp(cplx(0, n) * w) + f.at(n, 2) * std::exp(cplx(0, -n) * w));
  }
  CHECK(std::abs(holo_eval(img, z) - ref) < 1e-12 * std::abs(ref));
  CHECK(std::abs(holo_eval_scaled(img, z, 3.0) - ref * std::exp(-3.0)) < 1e-12 * std::abs(ref));
  const auto hf = holo_from_image(img);
  CHECK(std::abs(hf(z, 0.0) - ref) < 1e-12 * std::abs(ref));
}

TEST_CASE("image equals the heat-smoothed function at real points") {
  // f * gamma_t on X: each band multiplied by e^{-t a}; compare synthesize
  const auto f = random_coeffs(kSphere, 5, 21);
  const auto img = bargmann_forward(f, 0.15);
  for (const auto& p : halton_points(5)) {
    const ComplexPoint x{unit_cube_to_U(kSphere, p), 0.0};
    CHECK(std::abs(holo_eval(img, x) - synthesize(img.coeffs, x)) < 1e-12);
  }
}

TEST_CASE("non-bandlimited tails are checked") {
  const auto img = builtin_image(kCircle, "half-heat", 8, 0.25);
  CHECK_FALSE(img.bandlimited);
  CHECK_THROWS_AS(holo_eval(img, ComplexPoint{{0, 0, 0}, 3.0}), TruncationInsufficient);
}

TEST_CASE("holomorphic fourier coefficients recover c_t e^{t a} f_hat") {
  const double t = 0.25;
  for (const auto& sp : {kCircle, kSphere, kSu2}) {
    const int lmax = sp.kind == SpaceKind::Sphere2 ? 4 : 6;
    const auto f = random_coeffs(sp, lmax, 5);
    const auto img = bargmann_forward(f, t);
    HoloCoeffInfo info;
    const auto holo = holo_fourier_coeffs(sp, holo_from_image(img), t, lmax, {}, &info);
    CHECK_FALSE(info.low_confidence);
    const double ct = stenzel_constant(sp, t);
    for (int l = 0; l <= lmax; ++l) {
      for (int j = 1; j <= holo.layout().slots(l); ++j) {
        const cplx expect = ct * std::exp(t * eigenvalue(sp, l)) * f.at(l, j);
        CHECK(std::abs(holo.at(l, j) - expect) <= 1e-8 * (std::abs(expect) + ct));
      }
    }
  }
}

TEST_CASE("plain wrapper applies the scale") {
  const auto h = holo_from_plain([](const ComplexPoint& z) { return cplx(z.h, 1.0); });
  const auto v = h(ComplexPoint{{0, 0, 0}, 2.0}, std::log(2.0));
  CHECK(std::abs(v - cplx(1.0, 0.5)) < 1e-15);
}
