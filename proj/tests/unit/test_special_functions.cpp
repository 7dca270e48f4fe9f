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
#include "gutzmer/special_functions.hpp"

using namespace gutzmer;
using std::numbers::pi;

namespace {

const SpaceModel kCircle = make_space(SpaceKind::Circle);
const SpaceModel kSphere = make_space(SpaceKind::Sphere2);
const SpaceModel kSu2 = make_space(SpaceKind::Su2Zonal);

// Laplace integral P_nu(cosh r) = (1/pi) int_0^pi (cosh r + sinh r cos th)^nu dth,
// composite Simpson; smooth and periodic so this converges fast.
cplx conical_oracle(cplx nu, double r) {
  const int n = 4000;
  cplx acc = 0.0;
  for (int i = 0; i <= n; ++i) {
    const double th = pi * i / n;
    const double w = (i == 0 || i == n) ? 1.0 : (i % 2 ? 4.0 : 2.0);
    acc += w * std::pow(cplx(std::cosh(r) + std::sinh(r) * std::cos(th)), nu);
  }
  return acc * (pi / n / 3.0) / pi;
}

}  // namespace

TEST_CASE("legendre against std::legendre on [-1,1]") {
  for (int l = 0; l <= 30; ++l) {
    for (double x : {-0.93, -0.2, 0.0, 0.41, 0.999}) {
      CHECK(legendre_p(l, x).real() == doctest::Approx(std::legendre(l, x)).epsilon(1e-12));
    }
  }
}

TEST_CASE("legendre off the interval") {
  const cplx z(1.7, 0.3);
  CHECK(std::abs(legendre_p(2, z) - (3.0 * z * z - 1.0) / 2.0) < 1e-13);
  CHECK(std::abs(legendre_p(3, z) - (5.0 * z * z * z - 3.0 * z) / 2.0) < 1e-13);
}

TEST_CASE("chebyshev identities") {
  for (int n = 0; n <= 25; ++n) {
    for (double h : {0.0, 0.3, 1.9}) {
      CHECK(chebyshev_t(n, std::cosh(h)).real() ==
            doctest::Approx(std::cosh(n * h)).epsilon(1e-12));
    }
    const double th = 0.77;
    CHECK(chebyshev_u(n, std::cos(th)).real() ==
          doctest::Approx(std::sin((n + 1) * th) / std::sin(th)).epsilon(1e-12));
  }
}

TEST_CASE("zonal spherical functions at real radius") {
  for (int l = 0; l <= 12; ++l) {
    for (double h : {0.0, 0.25, 1.0, 3.0}) {
      CHECK(zonal_radial(kCircle, l, h) == doctest::Approx(std::cosh(l * h)).epsilon(1e-12));
      const double su2 = h == 0.0 ? 1.0 : std::sinh((l + 1) * h) / ((l + 1) * std::sinh(h));
      CHECK(zonal_radial(kSu2, l, h) == doctest::Approx(su2).epsilon(1e-12));
      CHECK(std::exp(log_zonal_radial(kSphere, l, h)) ==
            doctest::Approx(zonal_radial(kSphere, l, h)).epsilon(1e-12));
    }
  }
  // log form keeps going where the value overflows: cosh(400 * 3) ~ e^1200 / 2
  CHECK(log_zonal_radial(kCircle, 400, 3.0) == doctest::Approx(1200.0 - std::log(2.0)));
}

TEST_CASE("circle matrix coefficients are characters") {
  const ComplexPoint z{{0.6, 0.0, 0.0}, 0.4};
  for (int n = 1; n <= 6; ++n) {
    const cplx w(0.6, 0.4);
    CHECK(std::abs(matrix_coefficient(kCircle, n, 1, z) - std::exp(cplx(0, n) * w)) < 1e-13);
    CHECK(std::abs(matrix_coefficient(kCircle, n, 2, z) - std::exp(cplx(0, -n) * w)) < 1e-13);
  }
  CHECK_THROWS_AS(matrix_coefficient(kCircle, 0, 2, z), IndexOutOfRange);
}

TEST_CASE("sphere harmonics: zonal slot and addition theorem") {
  const auto pts = halton_points(40);
  for (const auto& p : pts) {
    const ComplexPoint x{unit_cube_to_U(kSphere, p), 0.0};
    const auto v = embed_point(kSphere, x);
    CHECK(std::abs(std::norm(v[0]) + std::norm(v[1]) + std::norm(v[2]) - 1.0) < 1e-13);
    for (int l = 0; l <= 9; ++l) {
      CHECK(matrix_coefficient(kSphere, l, 1, x).real() ==
            doctest::Approx(std::legendre(l, v[2].real())).epsilon(1e-11));
      // Schmidt semi-normalized real harmonics: sum of squares is 1
      double s = 0.0;
      for (int j = 1; j <= 2 * l + 1; ++j) s += std::norm(matrix_coefficient(kSphere, l, j, x));
      CHECK(s == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("batched matrix coefficients match single evaluations") {
  for (const auto& sp : {kCircle, kSphere, kSu2}) {
    const int lmax = 6;
    SlotLayout lay(sp, lmax);
    std::vector<cplx> all(lay.size()), scaled(lay.size());
    const ComplexPoint z{unit_cube_to_U(sp, {0.3, 0.6, 0.1}), 0.8};
    matrix_coefficients(sp, lmax, z, all);
    matrix_coefficients_scaled(sp, lmax, z, 2.0, scaled);
    for (int l = 0; l <= lmax; ++l) {
      for (int j = 1; j <= lay.slots(l); ++j) {
        const cplx one = matrix_coefficient(sp, l, j, z);
        CHECK(std::abs(all[lay.index(l, j)] - one) <= 1e-12 * (1.0 + std::abs(one)));
        CHECK(std::abs(scaled[lay.index(l, j)] - one * std::exp(-2.0)) <=
              1e-12 * (1.0 + std::abs(one)));
      }
    }
  }
}

TEST_CASE("slot radial factors") {
  for (double h : {0.0, 0.5, 1.5}) {
    for (int l = 0; l <= 8; ++l) {
      CHECK(slot_radial_factor(kSphere, l, 1, h) ==
            doctest::Approx(legendre_p(l, std::cosh(2 * h)).real()).epsilon(1e-12));
      if (l > 0) {
        CHECK(slot_radial_factor(kCircle, l, 1, h) == doctest::Approx(std::exp(-2.0 * l * h)));
        CHECK(slot_radial_factor(kCircle, l, 2, h) == doctest::Approx(std::exp(2.0 * l * h)));
      }
      CHECK(std::exp(log_slot_radial_factor(kSu2, l, 1, h)) ==
            doctest::Approx(slot_radial_factor(kSu2, l, 1, h)).epsilon(1e-12));
    }
  }
}

TEST_CASE("dual spherical functions") {
  for (double r : {0.0, 0.4, 2.0}) {
    for (double mu : {0.3, 1.7}) {
      CHECK(dual_spherical(kCircle, mu, r).real() == doctest::Approx(std::cos(mu * r)));
      const double su2 = r == 0.0 ? 1.0 : std::sin(mu * r) / (mu * std::sinh(r));
      CHECK(dual_spherical(kSu2, mu, r).real() == doctest::Approx(su2).epsilon(1e-12));
      const cplx ref = conical_oracle(cplx(-0.5, mu), r);
      CHECK(std::abs(dual_spherical(kSphere, mu, r) - ref) < 1e-10);
    }
  }
  // at mu = -i(l + rho) the dual function is phi_l(exp H)
  for (int l = 0; l <= 6; ++l) {
    const double r = 0.9;
    CHECK(dual_spherical(kSphere, cplx(0.0, -(l + 0.5)), r).real() ==
          doctest::Approx(legendre_p(l, std::cosh(r)).real()).epsilon(1e-10));
    CHECK(dual_spherical(kSu2, cplx(0.0, -(l + 1.0)), r).real() ==
          doctest::Approx(zonal_radial(kSu2, l, r)).epsilon(1e-12));
  }
}
