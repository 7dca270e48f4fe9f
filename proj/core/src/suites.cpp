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

#include "gutzmer/suites.hpp"

#include <algorithm>
#include <cmath>

#include "gutzmer/diagnostics.hpp"

namespace gutzmer {
namespace {

// Independent seeds for the functions of one check.
std::vector<SpectralCoeffs> random_family(const SpaceModel& space, int lmax, std::uint64_t seed,
                                          std::uint64_t stream, int count) {
  std::vector<SpectralCoeffs> fs;
  for (int i = 0; i < count; ++i) {
    fs.push_back(random_coeffs(space, lmax, seed * 1000003ULL + stream * 1009ULL + i));
  }
  return fs;
}

void gutzmer_suite(const SpaceModel& space, const RunConfig& cfg,
                   std::vector<VerificationReport>& out) {
  const BargmannImage image = bargmann_forward(random_family(space, cfg.lmax, cfg.seed, 1, 1)[0], cfg.t);
  std::vector<double> hs = {0.0, 0.25, 0.5, 1.0};
  if (space.kind == SpaceKind::Circle) {
    hs.push_back(2.0);
    hs.push_back(4.0);
  }
  for (double h : hs) out.push_back(gutzmer_check(image, h));
  out.push_back(spherical_duality_check(space, cfg.lmax, 3.0, 1e-10));
  out.push_back(matrix_coefficient_bound_check(space, std::min(cfg.lmax, 12), 2.0, 64));
}

void stenzel_suite(const SpaceModel& space, const RunConfig& cfg,
                   std::vector<VerificationReport>& out) {
  const int l = std::min(cfg.lmax, 8);
  out.push_back(stenzel_check(space, random_family(space, l, cfg.seed, 2, 10), cfg.t));
  out.push_back(dual_kernel_property_check(space, cfg.t, l,
                                           space.kind == SpaceKind::Sphere2 ? 1e-7 : 1e-9));
  out.push_back(differentiated_kernel_check(space, cfg.t, l, 2,
                                            space.kind == SpaceKind::Sphere2 ? 1e-7 : 1e-9));
  out.push_back(holo_fourier_identity_check(random_family(space, l, cfg.seed, 3, 1)[0], cfg.t));
  std::vector<double> grid;
  for (int i = 0; i <= 40; ++i) grid.push_back(10.0 * i / 40);
  out.push_back(ao_envelope_check(space, cfg.t, grid));
}

void sobolev_suite(const SpaceModel& space, const RunConfig& cfg,
                   std::vector<VerificationReport>& out) {
  const int l = std::min(cfg.lmax, 8);
  const auto fs = random_family(space, l, cfg.seed, 4, 2);
  for (double s : {-1.0, 0.5, 2.0}) out.push_back(isometry_check(fs[0], cfg.t, s));
  out.push_back(duality_check(fs[0], fs[1], cfg.t, 1.0));
  out.push_back(membership_check(space, "gaussian-coeff", 2.0, cfg.t, l, Membership::Converged));
  out.push_back(membership_check(space, "delta", 0.0, cfg.t, l, Membership::Growing));
  out.push_back(membership_check(space, "delta", -4.0, cfg.t, l, Membership::Converged));
}

void weights_suite(const SpaceModel& space, const RunConfig& cfg,
                   std::vector<VerificationReport>& out) {
  const int l = std::min(cfg.lmax, 8);
  const auto fs = random_family(space, l, cfg.seed, 5, 3);
  out.push_back(weight_identity_check(space, fs, cfg.t, 2));
  for (int m = 1; m <= 2; ++m) out.push_back(delta_star_check(space, cfg.t, m));
  for (int m = 1; m <= 2; ++m) out.push_back(bergman_equivalence_check(space, fs, cfg.t, m));
  for (double s : {0.5, 1.0, 2.0}) out.push_back(sandwich_check(space, cfg.t, s, 32));
  out.push_back(negative_order_check(space, fs, cfg.t, 1.0));
  for (int m = 0; m <= 3; ++m) out.push_back(derivative_bound_check(space, cfg.t, m));
}

void growth_suite(const SpaceModel& space, const RunConfig& cfg,
                  std::vector<VerificationReport>& out) {
  const int l = std::max(cfg.lmax, 16);
  for (int m = 0; m <= 4; ++m) {
    const std::string family = "power:" + std::to_string(-(m + 2) / 2.0 - 1.0);
    out.push_back(pointwise_bound_check(builtin_image(space, family, l, cfg.t), m,
                                        resolved_extent(cfg.t, l)));
  }
  if (space.kind == SpaceKind::Circle) {
    for (int m = 1; m <= 4; ++m) out.push_back(reproducing_kernel_check(cfg.t, m, {0.0, 0.5, 1.0, 2.0}));
  }
  const int cl = std::max(cfg.lmax, classifier_lmax(space));
  for (const auto& c : classifier_corpus()) out.push_back(classifier_case_check(space, c, cfg.t, cl));
  const int tl = space.kind == SpaceKind::Circle ? 32 : 10;
  for (int m = 1; m <= 2; ++m) out.push_back(sufficiency_check(space, cfg.t, m, tl));
}

}  // namespace

void validate(const RunConfig& cfg) {
  if (!(cfg.t > 0.0) || !std::isfinite(cfg.t)) throw ConfigError("t must be a positive number");
  if (cfg.lmax < 1 || cfg.lmax > 64) throw ConfigError("lmax must lie in 1..64");
  for (const auto& [k, v] : cfg.tolerances) {
    if (!(v >= 0.0)) throw ConfigError("tolerance '" + k + "' must be non-negative");
  }
}

std::string_view to_string(Suite s) {
  switch (s) {
    case Suite::Gutzmer:
      return "gutzmer";
    case Suite::Stenzel:
      return "stenzel";
    case Suite::Sobolev:
      return "sobolev";
    case Suite::Weights:
      return "weights";
    case Suite::Growth:
      return "growth";
    case Suite::All:
      return "all";
  }
  return "all";
}

Suite parse_suite(std::string_view name) {
  for (Suite s : {Suite::Gutzmer, Suite::Stenzel, Suite::Sobolev, Suite::Weights, Suite::Growth,
                  Suite::All}) {
    if (name == to_string(s)) return s;
  }
  throw ConfigError("unknown suite '" + std::string(name) + "'");
}

std::vector<VerificationReport> run_suite(Suite suite, const RunConfig& cfg) {
  validate(cfg);
  const SpaceModel space = make_space(cfg.space);
  std::vector<VerificationReport> out;
  const bool all = suite == Suite::All;
  if (all || suite == Suite::Gutzmer) gutzmer_suite(space, cfg, out);
  if (all || suite == Suite::Stenzel) stenzel_suite(space, cfg, out);
  if (all || suite == Suite::Sobolev) sobolev_suite(space, cfg, out);
  if (all || suite == Suite::Weights) weights_suite(space, cfg, out);
  if (all || suite == Suite::Growth) growth_suite(space, cfg, out);
  if (const auto it = cfg.tolerances.find("override"); it != cfg.tolerances.end()) {
    for (auto& r : out) {
      const bool low = r.verdict == Verdict::LowConfidence;
      if (r.verdict == Verdict::Inconclusive) continue;
      r.tolerance = it->second;
      r.verdict = judge(r.rel_error, r.tolerance, low);
    }
  }
  return out;
}

int exit_code(const std::vector<VerificationReport>& reports) {
  bool soft = false;
  for (const auto& r : reports) {
    if (r.verdict == Verdict::Fail) return 1;
    if (r.verdict != Verdict::Pass) soft = true;
  }
  return soft ? 2 : 0;
}

}  // namespace gutzmer
