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

#include "gutzmer/space_model.hpp"

#include <cmath>
#include <numbers>

namespace gutzmer {

std::string_view to_string(SpaceKind kind) {
  switch (kind) {
    case SpaceKind::Circle:
      return "circle";
    case SpaceKind::Sphere2:
      return "sphere2";
    case SpaceKind::Su2Zonal:
      return "su2";
  }
  return "unknown";
}

SpaceKind parse_space_kind(std::string_view name) {
  if (name == "circle") return SpaceKind::Circle;
  if (name == "sphere2") return SpaceKind::Sphere2;
  if (name == "su2" || name == "su2_zonal") return SpaceKind::Su2Zonal;
  throw std::invalid_argument("unknown space '" + std::string(name) + "'");
}

SpaceModel make_space(SpaceKind kind) {
  constexpr double pi = std::numbers::pi;
  switch (kind) {
    case SpaceKind::Circle:
      // Lebesgue measure on R folded onto the half line.
      return {kind, 0.0, 0, 2.0 * pi, 1, 2.0};
    case SpaceKind::Sphere2:
      // H^2: dV = 2 pi sinh(r) dr.
      return {kind, 0.5, 1, pi, 3, 2.0 * pi};
    case SpaceKind::Su2Zonal:
      // H^3: dV = 4 pi sinh(r)^2 dr.
      return {kind, 1.0, 2, pi, 3, 4.0 * pi};
  }
  throw std::invalid_argument("bad SpaceKind");
}

double eigenvalue(const SpaceModel& space, int lambda) {
  const double shifted = lambda + space.rho;
  return shifted * shifted;
}

int dimension(const SpaceModel& space, int lambda) {
  switch (space.kind) {
    case SpaceKind::Circle:
      return 1;
    case SpaceKind::Sphere2:
      return 2 * lambda + 1;
    case SpaceKind::Su2Zonal:
      return (lambda + 1) * (lambda + 1);
  }
  return 1;
}

int slot_count(const SpaceModel& space, int lambda) {
  switch (space.kind) {
    case SpaceKind::Circle:
      return lambda == 0 ? 1 : 2;
    case SpaceKind::Sphere2:
      return 2 * lambda + 1;
    case SpaceKind::Su2Zonal:
      return 1;
  }
  return 1;
}

int zonal_weight(const SpaceModel& space, int lambda) {
  return (space.kind == SpaceKind::Circle && lambda > 0) ? 2 : 1;
}

double jacobian_j0(const SpaceModel& space, double theta) {
  return std::pow(std::sin(theta), space.mult_alpha);
}

double jacobian_j(const SpaceModel& space, double h) {
  return std::pow(std::sinh(2.0 * h), space.mult_alpha);
}

double jacobian_j1(const SpaceModel& space, double h) {
  return std::pow(std::sinh(h), space.mult_alpha);
}

double phi_factor(const SpaceModel& space, double h) {
  const double x = std::abs(h);
  // x / sinh x to full precision near 0.
  const double ratio = x < 1e-4 ? 1.0 - x * x / 6.0 : x / std::sinh(x);
  return std::pow(ratio, space.mult_alpha);
}

double root_product(const SpaceModel& space, double h) {
  return std::pow(std::abs(h), space.mult_alpha);
}

SlotLayout::SlotLayout(const SpaceModel& space, int lmax) : lmax_(lmax) {
  if (lmax < 0) throw std::invalid_argument("lmax must be nonnegative");
  offsets_.reserve(static_cast<std::size_t>(lmax) + 2);
  offsets_.push_back(0);
  for (int lambda = 0; lambda <= lmax; ++lambda) {
    offsets_.push_back(offsets_.back() +
                       static_cast<std::size_t>(slot_count(space, lambda)));
  }
}

std::size_t SlotLayout::index(int lambda, int j) const {
  if (lambda < 0 || lambda > lmax_) {
    throw IndexOutOfRange("lambda " + std::to_string(lambda) +
                          " outside 0.." + std::to_string(lmax_));
  }
  if (j < 1 || j > slots(lambda)) {
    throw IndexOutOfRange("slot j=" + std::to_string(j) + " outside 1.." +
                          std::to_string(slots(lambda)) + " for lambda " +
                          std::to_string(lambda));
  }
  return offsets_[lambda] + static_cast<std::size_t>(j - 1);
}

}  // namespace gutzmer
