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

// gutzmer: verification suites, transforms and growth classification for
// heat-kernel images on the circle, the 2-sphere and SU(2).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "coeff_io.hpp"
#include "gutzmer/diagnostics.hpp"
#include "gutzmer/suites.hpp"
#include "json.hpp"
#include "report_io.hpp"

namespace {

using namespace gutzmer;
using nlohmann::json;

constexpr int kExitConfig = 64;
constexpr int kExitParse = 65;
constexpr int kExitIo = 74;

struct Common {
  std::string space = "circle";
  std::optional<double> t;
  std::optional<int> lmax;
  std::optional<double> tol;
  std::uint64_t seed = 0;
  std::string out;
  std::string format = "json";
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--space", c.space, "circle | sphere2 | su2")
      ->check(CLI::IsMember({"circle", "sphere2", "su2", "su2_zonal"}));
  cmd->add_option("--t", c.t, "heat time, > 0")->required();
  cmd->add_option("--lmax", c.lmax, "bandlimit of test data");
  cmd->add_option("--tol", c.tol, "replace every check's tolerance");
  cmd->add_option("--seed", c.seed, "seed for random test functions");
  cmd->add_option("--out", c.out, "output path (default stdout)");
  cmd->add_option("--format", c.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    std::cout.flush();
  } else {
    cli::write_text(path, text);
  }
}

RunConfig make_config(const Common& c, int default_lmax) {
  RunConfig cfg;
  cfg.space = parse_space_kind(c.space);
  cfg.t = *c.t;
  cfg.lmax = c.lmax.value_or(default_lmax);
  if (c.tol) cfg.tolerances["override"] = *c.tol;
  cfg.seed = c.seed;
  cfg.output_path = c.out;
  cfg.format = c.format == "csv" ? OutputFormat::Csv : OutputFormat::Json;
  validate(cfg);
  return cfg;
}

bool is_builtin(const std::string& input) {
  if (input.starts_with("power:")) return true;
  for (const auto& n : builtin_names()) {
    if (n == input) return true;
  }
  return false;
}

// Image of the input: a builtin family or a coefficient file.
BargmannImage load_image(const std::string& input, const RunConfig& cfg, json& meta) {
  if (input.empty()) throw cli::ParseError("empty input");
  const SpaceModel space = make_space(cfg.space);
  if (is_builtin(input)) {
    meta["input"] = input;
    try {
      return builtin_image(space, input, cfg.lmax, cfg.t);
    } catch (const std::invalid_argument& e) {
      throw cli::ParseError(e.what());
    }
  }
  const cli::CoeffFile f = cli::read_coeff_file(input);
  if (f.coeffs.space().kind != cfg.space) throw ConfigError("file space differs from --space");
  meta["input"] = input;
  if (f.image) {
    if (*f.t != cfg.t) throw ConfigError("file t differs from --t");
    return BargmannImage{f.coeffs, *f.t, true};
  }
  return bargmann_forward(f.coeffs, cfg.t);
}

int cmd_verify(const std::string& suite_name, const Common& c) {
  const RunConfig cfg = make_config(c, 8);
  const Suite suite = parse_suite(suite_name);
  const auto start = std::chrono::steady_clock::now();
  const std::vector<VerificationReport> reports = run_suite(suite, cfg);
  const long long total = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - start)
                              .count();
  if (cfg.format == OutputFormat::Csv) {
    emit(c.out, cli::reports_to_csv(reports));
  } else {
    emit(c.out, cli::verify_document(suite_name, cfg, reports, total).dump(1) + "\n");
  }
  for (const auto& r : reports) {
    if (r.verdict != Verdict::Pass) {
      std::fprintf(stderr, "%s [%s]: %s rel_error=%.3g tol=%.3g %s\n", r.check_name.c_str(),
                   std::string(to_string(r.space)).c_str(), std::string(to_string(r.verdict)).c_str(),
                   r.rel_error, r.tolerance, r.note.c_str());
    }
  }
  return exit_code(reports);
}

int cmd_transform(const std::string& input, const Common& c, const std::string& profile) {
  const RunConfig cfg = make_config(c, 16);
  json meta;
  const BargmannImage image = load_image(input, cfg, meta);
  emit(c.out, cli::dump_coeff_json(cli::CoeffFile{image.coeffs, image.t, true}));
  if (!profile.empty()) {
    const SpaceModel space = make_space(cfg.space);
    GrowthGrid grid;
    grid.h_max = resolved_extent(cfg.t, image.coeffs.lmax());
    const GrowthProfile p = growth_profile(space, holo_from_image(image), cfg.t, grid);
    std::string csv = "H,log_sup_abs,envelope_residual\n";
    char buf[96];
    for (std::size_t i = 0; i < p.h_grid.size(); ++i) {
      std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", p.h_grid[i], p.log_sup_abs[i],
                    p.envelope_residual[i]);
      csv += buf;
    }
    cli::write_text(profile, csv);
  }
  return 0;
}

int cmd_classify(const std::string& input, const Common& c) {
  const SpaceModel space = make_space(parse_space_kind(c.space));
  const RunConfig cfg = make_config(c, classifier_lmax(space));
  json doc;
  const BargmannImage image = load_image(input, cfg, doc);
  const HoloFunction f = holo_from_image(image);
  GrowthGrid grid;
  grid.h_max = resolved_extent(cfg.t, image.coeffs.lmax());
  const ClassifierResult sm = smooth_image_classifier(space, f, cfg.t, grid);
  const ClassifierResult di = distribution_image_classifier(space, f, cfg.t, grid);
  doc["command"] = "classify";
  doc["space"] = std::string(to_string(cfg.space));
  doc["t"] = cfg.t;
  doc["lmax"] = image.coeffs.lmax();
  doc["H_max"] = grid.h_max;
  const double sigma = sm.profile.fitted_order;
  doc["fitted_order"] = std::isfinite(sigma) ? json(sigma) : json(std::isnan(sigma) ? "nan" : "-inf");
  doc["smooth"] = {{"verdict", std::string(to_string(sm.verdict))}, {"order_estimate", sm.order_estimate}};
  doc["distribution"] = {{"verdict", std::string(to_string(di.verdict))},
                         {"order_estimate", di.order_estimate}};
  if (cfg.format == OutputFormat::Csv) {
    std::string csv = "input,smooth_verdict,smooth_order,distribution_verdict,distribution_order\n";
    csv += input + "," + std::string(to_string(sm.verdict)) + "," + std::to_string(sm.order_estimate) +
           "," + std::string(to_string(di.verdict)) + "," + std::to_string(di.order_estimate) + "\n";
    emit(c.out, csv);
  } else {
    emit(c.out, doc.dump(1) + "\n");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification suites, transforms and growth classifiers for heat-kernel images",
               "gutzmer"};
  app.require_subcommand(1);
  app.footer(
      "Exit codes: 0 all checks pass, 1 a check failed, 2 only low-confidence or\n"
      "inconclusive results, 64 bad configuration, 65 unparseable input, 74 I/O error.\n"
      "Environment: GUTZMER_MAX_NODES caps quadrature doubling (default 16384).");

  Common common;
  std::string suite, input, profile;

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "gutzmer | stenzel | sobolev | weights | growth | all")
      ->required();
  add_common(verify, common);

  auto* transform = app.add_subcommand("transform", "write image coefficients of an input");
  transform->add_option("input", input, "builtin name or coefficient file")->required();
  transform->add_option("--profile", profile, "also write an (H, sup|F|) table here");
  add_common(transform, common);

  auto* classify = app.add_subcommand("classify", "run the growth classifiers on an input");
  classify->add_option("input", input, "builtin name or coefficient file")->required();
  add_common(classify, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    // error first, then the usage of whichever command was being parsed
    std::fprintf(stderr, "%s\n\n", e.what());
    const CLI::App* shown = &app;
    for (const CLI::App* sub : {verify, transform, classify}) {
      if (sub->parsed()) shown = sub;
    }
    std::fputs(shown->help().c_str(), stderr);
    return kExitConfig;
  }

  try {
    if (*verify) return cmd_verify(suite, common);
    if (*transform) return cmd_transform(input, common, profile);
    if (*classify) return cmd_classify(input, common);
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "configuration error: %s\n", e.what());
    return kExitConfig;
  } catch (const cli::ParseError& e) {
    std::fprintf(stderr, "parse error: %s\n", e.what());
    return kExitParse;
  } catch (const cli::IoError& e) {
    std::fprintf(stderr, "I/O error: %s\n", e.what());
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "configuration error: %s\n", e.what());
    return kExitConfig;
  }
  return kExitConfig;
}
