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
#include <span>

#include "gutzmer/space_model.hpp"

namespace gutzmer {

using cplx = std::complex<double>;

/// Legendre polynomial P_l(z) by the three-term recurrence.
cplx legendre_p(int l, cplx z);
/// Chebyshev polynomials of the first and second kind.
cplx chebyshev_t(int n, cplx z);
cplx chebyshev_u(int n, cplx z);

/// phi_lambda as a polynomial in w, the cosine of the complex radial angle:
/// T_n(w) on the circle, P_l(w) on the sphere, U_l(w)/(l+1) on SU(2).
/// At exp(H).o the argument is w = cosh(H).
cplx zonal_spherical(const SpaceModel& space, int lambda, cplx w);

/// phi_lambda(exp(H).o) for real H, i.e. zonal_spherical at w = cosh(H).
double zonal_radial(const SpaceModel& space, int lambda, double h);
/// log of zonal_radial, finite for arguments where the value overflows.
double log_zonal_radial(const SpaceModel& space, int lambda, double h);

/// Matrix coefficient phi_j^lambda extended holomorphically to X_C.
///   Circle   j=1: e^{i n z}, j=2: e^{-i n z}, z = theta + i h
///   Sphere2  real solid harmonic of degree l at the complex unit vector of z,
///            Schmidt semi-normalized so that int |phi_j|^2 = 1/(2l+1);
///            j=1 is P_l(x3), j=2m / 2m+1 carry cos(m phi) / sin(m phi)
///   Su2Zonal j=1 only: chi_l(g)/(l+1)
/// Throws IndexOutOfRange for j outside 1..slot_count.
cplx matrix_coefficient(const SpaceModel& space, int lambda, int j,
                        const ComplexPoint& z);

/// All matrix coefficients for lambda <= lmax at z, written in SlotLayout
/// order into out (size SlotLayout(space, lmax).size()).
void matrix_coefficients(const SpaceModel& space, int lmax, const ComplexPoint& z,
                         std::span<cplx> out);

/// Same as matrix_coefficients but every entry multiplied by e^{-log_scale}.
/// Intermediate quantities are rescaled so entries whose scaled value is
/// representable do not overflow at large |H|.
void matrix_coefficients_scaled(const SpaceModel& space, int lmax,
                                const ComplexPoint& z, double log_scale,
                                std::span<cplx> out);

/// The complex unit vector u exp(H).o in C^3 (sphere) or the complex
/// half-trace cos of the SU(2) element (first entry; other entries 0), or
/// the complex angle theta + i h (circle).
std::array<cplx, 3> embed_point(const SpaceModel& space, const ComplexPoint& z);

/// d_lambda times the U-orbit mean of |phi_j^lambda(u exp(H))|^2. Equals
/// phi_lambda(exp(2H).o) except on the circle, where the two characters
/// give e^{-2nH} (j=1) and e^{2nH} (j=2).
double slot_radial_factor(const SpaceModel& space, int lambda, int j, double h);
double log_slot_radial_factor(const SpaceModel& space, int lambda, int j, double h);

/// Spherical function psi_mu(r) of the noncompact dual: cos(mu r) on R,
/// the Mehler-Dirichlet integral on H^2, sin(mu r)/(mu sinh r) on H^3.
cplx dual_spherical(const SpaceModel& space, cplx mu, double r);

}  // namespace gutzmer
