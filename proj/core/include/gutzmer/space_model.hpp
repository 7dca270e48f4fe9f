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
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gutzmer {

/// The three rank-one compact symmetric spaces the library models.
///
///   Circle   S^1 = U(1),               dual R,   no restricted roots
///   Sphere2  S^2 = SO(3)/SO(2),        dual H^2, rho = 1/2, m_alpha = 1
///   Su2Zonal S^3 = SU(2) (group case), dual H^3, rho = 1,   m_alpha = 2
///
/// Metrics are the unit-sphere metrics, so the single positive restricted
/// root satisfies (alpha, H) = r where r is the geodesic radial coordinate.
enum class SpaceKind { Circle, Sphere2, Su2Zonal };

std::string_view to_string(SpaceKind kind);

/// Parses "circle", "sphere2" or "su2" (also "su2_zonal"). Throws
/// std::invalid_argument on anything else.
SpaceKind parse_space_kind(std::string_view name);

/// Immutable descriptor of one concrete space.
struct SpaceModel {
  SpaceKind kind;
  double rho;             // |rho|
  int mult_alpha;         // m_alpha, 0 for the circle
  double chamber_period;  // period of the compact radial coordinate
  int dim_u_coords;       // coordinates parametrizing U in a ComplexPoint
  // Riemannian volume of Y in polar form is dual_measure_constant * J1(r) dr
  // on the closed chamber r >= 0 (the circle folds R onto [0, inf)).
  double dual_measure_constant;
};

SpaceModel make_space(SpaceKind kind);

/// |lambda + rho|^2, minus the spectral value of the shifted Laplacian.
double eigenvalue(const SpaceModel& space, int lambda);

/// d_lambda, the dimension of the spherical representation.
int dimension(const SpaceModel& space, int lambda);

/// Number of coefficient slots j stored for lambda. Equals d_lambda for the
/// sphere; the circle stores the characters +n and -n in two slots of a
/// one-dimensional representation; SU(2) keeps only the zonal slot.
int slot_count(const SpaceModel& space, int lambda);

/// Number of slots whose matrix coefficient equals 1 at the base point. This
/// is the weight of phi_lambda in the heat kernel series (2 for the circle's
/// folded +-n pair, 1 otherwise).
int zonal_weight(const SpaceModel& space, int lambda);

/// J0(theta) = sin(theta)^m_alpha, radial density on X.
double jacobian_j0(const SpaceModel& space, double theta);
/// J(H) = sinh(2H)^m_alpha, radial density on X_C.
double jacobian_j(const SpaceModel& space, double h);
/// J1(H) = sinh(H)^m_alpha, radial density on the dual Y; J1(2H) = J(H).
double jacobian_j1(const SpaceModel& space, double h);
/// Phi(H) = (H / sinh H)^m_alpha with the removable point Phi(0) = 1.
double phi_factor(const SpaceModel& space, double h);
/// prod over positive roots of (alpha, H)^m_alpha = |H|^m_alpha.
double root_product(const SpaceModel& space, double h);

/// A point u exp(H).o of the complexification in polar coordinates.
///
/// u holds the space-specific parametrization of U (unused entries are 0):
///   Circle   {theta}
///   Sphere2  {alpha, beta, gamma}, ZYZ Euler angles of SO(3)
///   Su2Zonal {eta, xi1, xi2}, Hopf coordinates a = cos(eta) e^{i xi1},
///            b = sin(eta) e^{i xi2} of the SU(2) element [[a, -b*], [b, a*]]
/// h is the radial coordinate in the closed positive chamber. The circle has
/// no Weyl group, so its chamber is all of R and h may be negative.
struct ComplexPoint {
  std::array<double, 3> u{};
  double h = 0.0;
};

/// Flat layout of the ragged (lambda, j) slot array, lambda = 0..lmax.
class SlotLayout {
 public:
  SlotLayout(const SpaceModel& space, int lmax);

  int lmax() const { return lmax_; }
  std::size_t size() const { return offsets_.back(); }
  std::size_t offset(int lambda) const { return offsets_[lambda]; }
  int slots(int lambda) const {
    return static_cast<int>(offsets_[lambda + 1] - offsets_[lambda]);
  }
  /// Flat index of slot (lambda, j), j is 1-based. Throws IndexOutOfRange.
  std::size_t index(int lambda, int j) const;

 private:
  int lmax_;
  std::vector<std::size_t> offsets_;
};

class IndexOutOfRange : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

}  // namespace gutzmer
