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

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gutzmer/heat_kernels.hpp"
#include "gutzmer/quadrature.hpp"
#include "gutzmer/report.hpp"
#include "gutzmer/sobolev.hpp"
#include "gutzmer/transform.hpp"

namespace gutzmer {

// ---- Test data -------------------------------------------------------------

/// Random bandlimited coefficients, i.i.d. complex normal entries on every
/// slot.
SpectralCoeffs random_coeffs(const SpaceModel& space, int lmax, std::uint64_t seed);

/// Named coefficient families, given as preimage coefficients f_hat.
///   delta           1 on zonal slots (the slots with phi_j(o) = 1)
///   gaussian-coeff  e^{-a} on zonal slots
///   exp-decay       e^{-sqrt(a)} on zonal slots
///   single-slot     1 at (min(2, lmax), 1)
///   power:<k>       (1 + a)^k on zonal slots
///   super-growth    e^{t a - sqrt(a)} (image coefficients e^{-sqrt(a)})
///   half-heat       e^{t a / 2}
/// Throws std::invalid_argument for unknown names. The growing families
/// overflow as preimages for large t a; builtin_image forms the image
/// coefficients e^{-t a} f_hat in log form instead.
SpectralCoeffs builtin_coeffs(const SpaceModel& space, std::string_view name,
                              int lmax, double t);
BargmannImage builtin_image(const SpaceModel& space, std::string_view name, int lmax,
                            double t);
/// Names accepted by builtin_coeffs, power:<k> listed as "power:<k>".
std::vector<std::string> builtin_names();

/// Maps a point of [0,1)^3 to U under normalized Haar measure.
std::array<double, 3> unit_cube_to_U(const SpaceModel& space,
                                     const std::array<double, 3>& x);

// ---- Identity checks -------------------------------------------------------

/// Orbit mean of |F(u exp H)|^2 on rule against
/// sum_lambda d_lambda sum_j |c_j|^2 slot_radial_factor(lambda, j, H).
VerificationReport gutzmer_check(const BargmannImage& image, double h,
                                 const OrbitRule& rule, double tolerance);
/// Uses orbit_rule(space, lmax) and tolerance 1e-12 (circle) or 1e-6.
VerificationReport gutzmer_check(const BargmannImage& image, double h);

/// Bergman p_t norm of f * gamma_t over ||f||^2 for each f. Passes when the
/// spread of the ratios is within tolerance and the mean matches
/// stenzel_constant(t) to const_tolerance.
VerificationReport stenzel_check(const SpaceModel& space,
                                 const std::vector<SpectralCoeffs>& fs, double t,
                                 double tolerance = 1e-6,
                                 double const_tolerance = 1e-9);

/// int_Y gamma^1_t psi_{-i(lambda+rho)} dm_1 = e^{t((lambda+rho)^2 - rho^2)}
/// for lambda <= lmax.
VerificationReport dual_kernel_property_check(const SpaceModel& space, double t,
                                              int lmax, double tolerance);

/// phi_lambda(exp H) = psi_{-i(lambda+rho)}(exp H) on a grid.
VerificationReport spherical_duality_check(const SpaceModel& space, int lmax,
                                           double h_max, double tolerance);

/// |phi_j(u exp H)| <= phi_lambda(exp 2H)^{1/2} on sampled u (per character
/// on the circle). The ratio against phi_lambda(exp H) is reported as
/// max_ratio_zonal_at_H.
VerificationReport matrix_coefficient_bound_check(const SpaceModel& space, int lmax,
                                                  double h_max, std::size_t samples);

/// Holomorphic Fourier coefficients of f * gamma_t by quadrature against
/// c e^{t a} f_hat: the fitted c must agree across slots.
VerificationReport holo_fourier_identity_check(const SpectralCoeffs& f, double t,
                                               double tolerance = 1e-6);

/// Bergman norm for weight WM with m = 0..mmax against
/// c sum d (1 + a)^m ||f_hat||^2, one constant c fitted at m = 0.
VerificationReport weight_identity_check(const SpaceModel& space,
                                         const std::vector<SpectralCoeffs>& fs,
                                         double t, int mmax, double tolerance = 1e-6);

/// Bergman norms under WM and under WM_BIG at delta* against
/// c sum d (1 + a)^m ||f_hat||^2 and c sum d (1 + delta + a^m) ||f_hat||^2.
/// The equivalence constants of the two norms, min and max over lambda of
/// (1 + delta + a^m) / (1 + a)^m, are reported as lower and upper.
VerificationReport bergman_equivalence_check(const SpaceModel& space,
                                             const std::vector<SpectralCoeffs>& fs,
                                             double t, int m, double tolerance = 1e-6);

/// int_0^inf d^m/dt^m gamma^1_{2t}(2H) phi_lambda(exp 2H) J1(2H) dH against
/// c 2^m (a - rho^2)^m e^{2t(a - rho^2)}, c fitted at lambda = 0, m = 0.
/// The largest deviation from the form with |lambda + rho|^{2m} e^{2 t a}
/// is reported as literal_form_max_rel.
VerificationReport differentiated_kernel_check(const SpaceModel& space, double t,
                                               int lmax, int mmax, double tolerance);

/// find_delta_star and a positivity scan of WM_DELTA at delta* on a grid
/// twice as fine as the search grid.
VerificationReport delta_star_check(const SpaceModel& space, double t, int m);

/// I_s(b) = (1/Gamma(s)) int_0^{2t} (2t-r)^{s-1} e^{r b} dr divided by
/// b^{-s} e^{2 t b}. Computed as a normalized incomplete gamma integral by
/// Gauss-Jacobi quadrature; lies in (0, 1) and increases to 1 in b.
double sandwich_ratio(double s, double t, double b);

/// sandwich_ratio at b = 1 + a_lambda for lambda <= lambda_max: bounded by
/// c1 = min and c2 = max, monotone, last value within 1e-6 of 1. For s = 1
/// also matched to the closed form 1 - e^{-2tb}.
VerificationReport sandwich_check(const SpaceModel& space, double t, double s,
                                  int lambda_max);

/// Bergman norm of f * gamma_t under W_NEG against
/// fold/(2 c_1) sum d e^{2t} (1+a)^{-s} sandwich_ratio ||f_hat||^2, and
/// the normalized ratio against [c1, c2].
VerificationReport negative_order_check(const SpaceModel& space,
                                        const std::vector<SpectralCoeffs>& fs,
                                        double t, double s, double tolerance = 1e-6);

/// sup_{r <= r_max} |d^m/dt^m gamma^1_t(r)| e^{r^2/(4 s)} with s = 1.25 t on
/// n and 2n point grids; passes when finite and stable to tolerance.
VerificationReport derivative_bound_check(const SpaceModel& space, double t, int m,
                                          double r_max = 10.0, int n = 400,
                                          double tolerance = 0.01);

/// C* = sup |F|^2 (1+H^2)^m Phi^{-1} e^{-H^2/(2t)} over an H grid and sampled
/// u, on n and 2n point grids; passes when finite and stable to tolerance.
VerificationReport pointwise_bound_check(const BargmannImage& image, int m,
                                         double h_max, int n = 200,
                                         std::size_t samples = 256,
                                         double tolerance = 0.02);

/// Circle only: the reproducing kernel of the order-m holomorphic Sobolev
/// space on the diagonal at i y, by its series and by
/// (1/(m-1)!) int_0^inf s^{m-1} e^{-s} gamma_{2t+s}(2 i y) ds with gamma from
/// the Poisson-summed theta function.
VerificationReport reproducing_kernel_check(double t, int m,
                                            const std::vector<double>& ys,
                                            double tolerance = 1e-7);

/// holo_sobolev_norm_sq(image, s) == sobolev_norm_sq(f, s).
VerificationReport isometry_check(const SpectralCoeffs& f, double t, double s);

/// Duality pairing of two images by quadrature against the coefficient
/// pairing c_t sum d f_hat conj(g_hat), plus the Cauchy-Schwarz bound
/// across orders s and -s.
VerificationReport duality_check(const SpectralCoeffs& f, const SpectralCoeffs& g,
                                 double t, double s, double tolerance = 1e-6);

/// membership_test on the image of a builtin family, computing holomorphic
/// coefficients by quadrature; PASS when the verdict equals expected.
VerificationReport membership_check(const SpaceModel& space, std::string_view family,
                                    double s, double t, int lmax, Membership expected);

/// Minimal d in the sufficiency condition for space: the least integer with
/// sum d_lambda^2 (1 + a)^{-d + r + n + 1} convergent.
int sufficiency_offset(const SpaceModel& space);

/// Builds F from f_hat = (1+a)^{-(m+d)/2 - 1} (which satisfies the pointwise
/// hypothesis), computes F~ by quadrature, checks the coefficient bound and
/// that the Sobolev functional of order m converges.
VerificationReport sufficiency_check(const SpaceModel& space, double t, int m,
                                           int lmax);

// ---- Growth classifiers ----------------------------------------------------

struct GrowthGrid {
  double h_max = 1.0;
  int points = 64;
  std::size_t u_samples = 256;
};

/// Envelope data on a radial grid. Values are logarithms so that profiles
/// stay finite where |F| overflows.
struct GrowthProfile {
  std::vector<double> h_grid;
  std::vector<double> log_sup_abs;        // log sup_u |F(u exp H)|
  std::vector<double> envelope_residual;  // log_sup_abs - log(Phi^{1/2} e^{H^2/4t})
  double fitted_order = 0.0;              // slope against log(1 + H^2)
};

GrowthProfile growth_profile(const SpaceModel& space, const HoloFunction& f, double t,
                             const GrowthGrid& grid);

enum class GrowthClass {
  SmoothConsistent,
  NotSmooth,
  DistributionConsistent,
  UnboundedGrowth,
  Inconclusive
};

std::string_view to_string(GrowthClass c);

struct ClassifierResult {
  GrowthClass verdict = GrowthClass::Inconclusive;
  int order_estimate = 0;
  GrowthProfile profile;
};

/// Slack on the fitted slope for finite grids.
inline constexpr double kEnvelopeSlack = 0.15;

/// Passes order m when fitted_order + m/2 <= slack. SMOOTH_CONSISTENT when
/// every m <= m_max passes, otherwise NOT_SMOOTH with the largest passing m
/// (-1 if none).
ClassifierResult smooth_image_classifier(const SpaceModel& space, const HoloFunction& f,
                                         double t, const GrowthGrid& grid, int m_max = 6);

/// Smallest m >= 0 with fitted_order <= m/2 + slack, or UNBOUNDED_GROWTH if
/// that m exceeds 64.
ClassifierResult distribution_image_classifier(const SpaceModel& space,
                                               const HoloFunction& f, double t,
                                               const GrowthGrid& grid);

/// Labeled inputs for the classifiers: label is "smooth", "distribution" or
/// "unbounded".
struct CorpusCase {
  std::string family;
  std::string label;
};
std::vector<CorpusCase> classifier_corpus();

/// Bandlimit at which corpus inputs are classified: large enough that
/// super-polynomial growth clears order 64 on the resolved range.
int classifier_lmax(const SpaceModel& space);

/// Runs both classifiers on builtin_image(family) and compares with label:
/// smooth -> SMOOTH_CONSISTENT; distribution -> not smooth but
/// DISTRIBUTION_CONSISTENT; unbounded -> UNBOUNDED_GROWTH.
VerificationReport classifier_case_check(const SpaceModel& space, const CorpusCase& c,
                                         double t, int lmax);

/// Radial range over which a series truncated at lmax resolves growth:
/// t * lmax, at least 1.
double resolved_extent(double t, int lmax);

}  // namespace gutzmer
