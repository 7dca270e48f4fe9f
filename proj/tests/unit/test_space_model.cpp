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
#include "gutzmer/space_model.hpp"
#include "gutzmer/transform.hpp"

using namespace gutzmer;

TEST_CASE("space names round trip") {
  for (auto k : {SpaceKind::Circle, SpaceKind::Sphere2, SpaceKind::Su2Zonal}) {
    CHECK(parse_space_kind(to_string(k)) == k);
  }
  CHECK(parse_space_kind("su2_zonal") == SpaceKind::Su2Zonal);
  CHECK_THROWS_AS(parse_space_kind("torus"), std::invalid_argument);
  CHECK_THROWS_AS(parse_space_kind(""), std::invalid_argument);
}

TEST_CASE("structure constants") {
  const auto c = make_space(SpaceKind::Circle);
  const auto s = make_space(SpaceKind::Sphere2);
  const auto u = make_space(SpaceKind::Su2Zonal);
  CHECK(c.rho == 0.0);
  CHECK(s.rho == 0.5);
  CHECK(u.rho == 1.0);
  CHECK(c.mult_alpha == 0);
  CHECK(s.mult_alpha == 1);
  CHECK(u.mult_alpha == 2);
  // hyperbolic volume elements 2 pi sinh r dr and 4 pi sinh^2 r dr
  CHECK(s.dual_measure_constant == doctest::Approx(2.0 * std::numbers::pi));
  CHECK(u.dual_measure_constant == doctest::Approx(4.0 * std::numbers::pi));
  CHECK(c.dual_measure_constant == 2.0);
}

TEST_CASE("spectrum and dimensions") {
  const auto s = make_space(SpaceKind::Sphere2);
  const auto u = make_space(SpaceKind::Su2Zonal);
  const auto c = make_space(SpaceKind::Circle);
  for (int l = 0; l <= 20; ++l) {
    // l(l+1) + 1/4 on the sphere, l(l+2) + 1 on SU(2)
    CHECK(eigenvalue(s, l) == doctest::Approx(l * (l + 1) + 0.25));
    CHECK(eigenvalue(u, l) == doctest::Approx(l * (l + 2) + 1.0));
    CHECK(eigenvalue(c, l) == doctest::Approx(double(l) * l));
    CHECK(dimension(s, l) == 2 * l + 1);
    CHECK(dimension(u, l) == (l + 1) * (l + 1));
    CHECK(dimension(c, l) == 1);
    CHECK(slot_count(s, l) == 2 * l + 1);
    CHECK(slot_count(u, l) == 1);
    CHECK(slot_count(c, l) == (l == 0 ? 1 : 2));
  }
}

TEST_CASE("jacobians") {
  const auto s = make_space(SpaceKind::Sphere2);
  const auto u = make_space(SpaceKind::Su2Zonal);
  for (double h : {0.1, 0.7, 2.5}) {
    CHECK(jacobian_j1(s, h) == doctest::Approx(std::sinh(h)));
    CHECK(jacobian_j1(u, h) == doctest::Approx(std::sinh(h) * std::sinh(h)));
    CHECK(jacobian_j(u, h) == doctest::Approx(std::pow(std::sinh(2 * h), 2)));
    CHECK(jacobian_j0(s, h) == doctest::Approx(std::sin(h)));
    CHECK(phi_factor(u, h) == doctest::Approx(std::pow(h / std::sinh(h), 2)));
    CHECK(root_product(s, h) == doctest::Approx(h));
  }
  // series branch near zero
  CHECK(phi_factor(s, 1e-6) == doctest::Approx(1.0 - 1e-12 / 6.0).epsilon(1e-15));
  CHECK(phi_factor(s, -0.5) == doctest::Approx(0.5 / std::sinh(0.5)));
}

TEST_CASE("slot layout") {
  const auto s = make_space(SpaceKind::Sphere2);
  SlotLayout lay(s, 3);
  CHECK(lay.size() == 16);
  CHECK(lay.index(0, 1) == 0);
  CHECK(lay.index(1, 1) == 1);
  CHECK(lay.index(3, 7) == 15);
  CHECK_THROWS_AS(lay.index(4, 1), IndexOutOfRange);
  CHECK_THROWS_AS(lay.index(1, 4), IndexOutOfRange);
  CHECK_THROWS_AS(lay.index(1, 0), IndexOutOfRange);
  CHECK_THROWS_AS(SlotLayout(s, -1), std::invalid_argument);

  const auto c = make_space(SpaceKind::Circle);
  SpectralCoeffs cc(c, 4);
  CHECK(cc.data().size() == 9);
  cc.at(2, 2) = {1.0, -2.0};
  CHECK(cc.band_norm_sq(2) == doctest::Approx(5.0));
  CHECK_THROWS_AS(cc.at(0, 2), IndexOutOfRange);
}
