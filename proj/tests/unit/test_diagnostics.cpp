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

#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "gutzmer/diagnostics.hpp"

using namespace gutzmer;
using std::numbers::pi;

namespace {

const SpaceModel kCircle = make_space(SpaceKind::Circle);
const SpaceModel kSphere = make_space(SpaceKind::Sphere2);
const SpaceModel kSu2 = make_space(SpaceKind::Su2Zonal);

}  // namespace

TEST_CASE("sandwich ratio is the regularized lower incomplete gamma") {
  for (double s : {0.5, 1.0, 2.0, 3.7}) {
    for (double t : {0.1, 0.25}) {
      for (double b : {1.0, 1.25, 7.0, 50.0, 1000.0}) {
        const double ref = boost::math::gamma_p(s, 2 * t * b);
        CHECK(sandwich_ratio(s, t, b) == doctest::Approx(ref).epsilon(1e-12));
      }
    }
  }
  CHECK(sandwich_ratio(1.0, 0.25, 3.0) == doctest::Approx(1.0 - std::exp(-1.5)).epsilon(1e-14));
}

TEST_CASE("negative order weight against incomplete gamma series") {
  // (fold / 2 c_1) e^{2t} sum d |f_hat|^2 (1+a)^{-s} P(s, 2t(1+a))
  const double t = 0.25;
  for (const auto& sp : {kCircle, kSphere, kSu2}) {
    const auto f = random_coeffs(sp, 4, 99);
    const double fold = sp.kind == SpaceKind::Circle ? 2.0 : 1.0;
    for (double s : {0.5, 1.0, 2.0}) {
      double ref = 0.0;
      for (int l = 0; l <= 4; ++l) {
        const double b = 1.0 + eigenvalue(sp, l);
        ref += dimension(sp, l) * f.band_norm_sq(l) * std::pow(b, -s) *
               boost::math::gamma_p(s, 2 * t * b);
      }
      ref *= fold / (2 * sp.dual_measure_constant) * std::exp(2 * t);
      BergmanOptions opts;
      opts.orbit_lmax = 4;
      const auto r = bergman_norm_sq(sp, holo_from_image(bargmann_forward(f, t)),
                                     WeightFunction{WeightFamily::W_NEG, t, s, 0, sp}, opts);
      CHECK(r.value == doctest::Approx(ref).epsilon(1e-8));
    }
  }
}

TEST_CASE("sectoral harmonic exceeds the zonal function at H") {
  // l = 2, cos(2 phi) slot: sup_u |phi| / phi_2(exp H) = (sqrt3/2) cosh 2H / ((3 cosh 2H + 1)/4)
  const double h = 3.0;
  const double c2 = std::cosh(2 * h);
  const double limit = (std::sqrt(3.0) / 2 * c2) / ((3 * c2 + 1) / 4);
  double worst = 0.0;
  for (const auto& p : halton_points(4096)) {
    const ComplexPoint z{unit_cube_to_U(kSphere, p), h};
    worst = std::max(worst, std::abs(matrix_coefficient(kSphere, 2, 4, z)));
  }
  const double ratio = worst / zonal_radial(kSphere, 2, h);
  CHECK(ratio > 1.1);
  CHECK(ratio <= limit * (1 + 1e-12));
  CHECK(ratio == doctest::Approx(limit).epsilon(0.01));
  // cauchy-schwarz form phi(exp 2H)^{1/2} holds
  CHECK(worst <= std::sqrt(zonal_radial(kSphere, 2, 2 * h)) * (1 + 1e-12));

  const auto rep = matrix_coefficient_bound_check(kSphere, 8, 2.0, 256);
  CHECK(rep.verdict == Verdict::Pass);
  CHECK(rep.fitted_constants.at("max_ratio") <= 1.0 + 1e-10);
  CHECK(rep.fitted_constants.at("max_ratio_zonal_at_H") > 1.0);
  for (const auto& sp : {kCircle, kSu2}) {
    const auto r = matrix_coefficient_bound_check(sp, 8, 2.0, 64);
    CHECK(r.verdict == Verdict::Pass);
    CHECK(r.fitted_constants.at("max_ratio_zonal_at_H") <= 1.0 + 1e-10);
  }
}

TEST_CASE("growth constant of matrix coefficients is one") {
  // phi_0 = 1 forces C >= 1; phi(exp 2H)^{1/2} <= e^{lambda |H|} forces C <= 1
  for (const auto& sp : {kCircle, kSphere, kSu2}) {
    const auto r = matrix_coefficient_bound_check(sp, 8, 2.0, 64);
    CHECK(r.fitted_constants.at("growth_constant") == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("differentiated dual kernel identity") {
  const double t = 0.25;
  const double c1[] = {2.0, 2.0 * pi, 4.0 * pi};
  int i = 0;
  for (const auto& sp : {kCircle, kSphere, kSu2}) {
    const auto r = differentiated_kernel_check(sp, t, 6, 2, 1e-7);
    CHECK(r.verdict == Verdict::Pass);
    CHECK(r.fitted_constants.at("c") == doctest::Approx(1.0 / (2.0 * c1[i++])).epsilon(1e-10));
  }
  // with rho = 0 the shift vanishes; otherwise lambda = 0, m = 1 alone
  // separates 2 rho^2 from 0
  CHECK(differentiated_kernel_check(kCircle, t, 6, 2, 1e-9).fitted_constants.at(
            "literal_form_max_rel") < 1e-9);
  CHECK(differentiated_kernel_check(kSu2, t, 6, 2, 1e-9).fitted_constants.at(
            "literal_form_max_rel") >= 1.0 - 1e-9);
  CHECK(differentiated_kernel_check(kSphere, t, 6, 2, 1e-7).fitted_constants.at(
            "literal_form_max_rel") > 0.2);
}

TEST_CASE("bergman norm equivalence constants on the circle") {
  // delta* = 1/(2 tau), 3/(2 tau^2) with tau = 2t = 1/2
  std::vector<SpectralCoeffs> fs;
  for (int i = 0; i < 2; ++i) fs.push_back(random_coeffs(kCircle, 6, 77 + i));
  const auto r1 = bergman_equivalence_check(kCircle, fs, 0.25, 1);
  CHECK(r1.verdict == Verdict::Pass);
  CHECK(r1.fitted_constants.at("upper") == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(r1.fitted_constants.at("lower") == doctest::Approx(1.0).epsilon(1e-12));
  // (7 + n^4) / (1 + n^2)^2 is least at n = 3
  const auto r2 = bergman_equivalence_check(kCircle, fs, 0.25, 2);
  CHECK(r2.verdict == Verdict::Pass);
  CHECK(r2.fitted_constants.at("lower") == doctest::Approx(0.88).epsilon(1e-12));
  CHECK(r2.fitted_constants.at("upper") == doctest::Approx(7.0).epsilon(1e-12));
  for (std::size_t i = 0; i < fs.size(); ++i) {
    CHECK(r2.lhs[i] >= 0.88);
    CHECK(r2.lhs[i] <= 7.0);
  }
}

TEST_CASE("sufficiency offsets from the dimension count") {
  // least d with 2 deg(d_lambda) + 2(-d + r + 2) < -1
  for (const auto& sp : {kCircle, kSphere, kSu2}) {
    const int deg = sp.kind == SpaceKind::Circle ? 0 : sp.kind == SpaceKind::Sphere2 ? 1 : 2;
    int d = 0;
    while (!(2 * deg + 2 * (-d + sp.mult_alpha + 2) < -1)) ++d;
    CHECK(sufficiency_offset(sp) == d);
  }
  CHECK(sufficiency_offset(kCircle) == 3);
  CHECK(sufficiency_offset(kSphere) == 5);
  CHECK(sufficiency_offset(kSu2) == 7);
}

TEST_CASE("sufficiency coefficient bound holds for low order") {
  for (int m : {1, 2, 3}) {
    const auto rep = sufficiency_check(kCircle, 0.25, m, 32);
    CHECK(rep.verdict == Verdict::Pass);
  }
}

TEST_CASE("sufficiency coefficient bound is violated at order 4") {
  // f_hat = (1+a)^{-(m+d)/2-1} satisfies the pointwise hypothesis but decays
  // like (1+a)^{-4.5} against the claimed (1+a)^{-5}; membership still holds.
  for (const auto& sp : {kCircle, kSu2}) {
    const auto rep = sufficiency_check(sp, 0.25, 4, sp.kind == SpaceKind::Circle ? 32 : 10);
    const int d = sufficiency_offset(sp);
    CHECK(rep.verdict == Verdict::Fail);
    CHECK(rep.fitted_constants.at("coefficient_exponent_fitted") ==
          doctest::Approx(-(4.0 + d) / 2 - 1).epsilon(0.02));
    CHECK(rep.fitted_constants.at("coefficient_exponent_bound") ==
          doctest::Approx(-4.0 - d + sp.mult_alpha + 2));
    CHECK(rep.note.find("coefficient decay") != std::string::npos);
  }
}

TEST_CASE("builtin delta image on the circle") {
  const auto img = builtin_image(kCircle, "delta", 12, 0.1);
  for (int n = 0; n <= 12; ++n) {
    for (int j = 1; j <= (n == 0 ? 1 : 2); ++j) {
      CHECK(img.coeffs.at(n, j).real() == doctest::Approx(std::exp(-0.1 * n * n)).epsilon(1e-15));
      CHECK(img.coeffs.at(n, j).imag() == 0.0);
    }
  }
  CHECK_THROWS_AS(builtin_coeffs(kCircle, "nope", 4, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(builtin_coeffs(kCircle, "power:x", 4, 0.1), std::invalid_argument);
}

TEST_CASE("random coefficients are reproducible") {
  const auto a = random_coeffs(kSphere, 5, 42);
  const auto b = random_coeffs(kSphere, 5, 42);
  const auto c = random_coeffs(kSphere, 5, 43);
  CHECK(std::equal(a.data().begin(), a.data().end(), b.data().begin()));
  CHECK_FALSE(std::equal(a.data().begin(), a.data().end(), c.data().begin()));
}

TEST_CASE("identity checks pass on small inputs") {
  const double t = 0.25;
  for (const auto& sp : {kCircle, kSphere, kSu2}) {
    const auto f = random_coeffs(sp, 4, 5);
    const auto g = random_coeffs(sp, 4, 6);
    CHECK(gutzmer_check(bargmann_forward(f, t), 0.5).verdict == Verdict::Pass);
    CHECK(isometry_check(f, t, -1.0).verdict == Verdict::Pass);
    CHECK(duality_check(f, g, t, 1.0).verdict == Verdict::Pass);
    CHECK(stenzel_check(sp, {f, g}, t).verdict == Verdict::Pass);
    CHECK(spherical_duality_check(sp, 6, 2.0, 1e-10).verdict == Verdict::Pass);
    CHECK(delta_star_check(sp, t, 1).verdict == Verdict::Pass);
    CHECK(derivative_bound_check(sp, t, 2).verdict == Verdict::Pass);
    CHECK(sandwich_check(sp, t, 1.0, 32).verdict == Verdict::Pass);
  }
  CHECK(dual_kernel_property_check(kSu2, t, 8, 1e-9).verdict == Verdict::Pass);
  CHECK(weight_identity_check(kSu2, {random_coeffs(kSu2, 6, 1)}, t, 2).verdict == Verdict::Pass);
  CHECK(negative_order_check(kCircle, {random_coeffs(kCircle, 6, 1)}, t, 1.0).verdict ==
        Verdict::Pass);
}

TEST_CASE("circle gutzmer check holds at large H") {
  const auto img = bargmann_forward(random_coeffs(kCircle, 32, 9), 0.25);
  for (double h : {2.0, 4.0}) {
    const auto rep = gutzmer_check(img, h);
    CHECK(rep.verdict == Verdict::Pass);
    CHECK(rep.rel_error <= 1e-12);
  }
}

TEST_CASE("circle stenzel constant is one half") {
  const double t = 0.25;
  const auto f = random_coeffs(kCircle, 6, 1);
  const auto rep = stenzel_check(kCircle, {f}, t);
  CHECK(rep.fitted_constants.at("c_t") == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(holo_fourier_identity_check(f, t).verdict == Verdict::Pass);
}

TEST_CASE("reproducing kernel series against the theta integral") {
  for (int m = 1; m <= 4; ++m) {
    const auto rep = reproducing_kernel_check(0.25, m, {0.0, 0.5, 2.0});
    CHECK(rep.verdict == Verdict::Pass);
    CHECK(rep.rel_error <= 1e-7);
  }
}

TEST_CASE("pointwise constants shrink as decay strengthens") {
  const double t = 0.25;
  for (const auto& sp : {kCircle, kSu2}) {
    double prev = std::numeric_limits<double>::infinity();
    for (double k : {-2.0, -3.0, -4.0, -5.0}) {
      const auto img = builtin_image(sp, "power:" + std::to_string(k), 16, t);
      const auto rep = pointwise_bound_check(img, 2, resolved_extent(t, 16));
      CHECK(rep.verdict == Verdict::Pass);
      const double c = rep.fitted_constants.at("log_C_fine");
      CHECK(c < prev);
      prev = c;
    }
  }
}

TEST_CASE("membership of builtin families") {
  CHECK(membership_check(kCircle, "gaussian-coeff", 2.0, 0.25, 8, Membership::Converged).verdict ==
        Verdict::Pass);
  CHECK(membership_check(kCircle, "delta", 0.0, 0.25, 8, Membership::Growing).verdict ==
        Verdict::Pass);
  // wrong expectation fails
  CHECK(membership_check(kCircle, "delta", 0.0, 0.25, 8, Membership::Converged).verdict ==
        Verdict::Fail);
}
