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
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gutzmer/report.hpp"
#include "gutzmer/space_model.hpp"

namespace gutzmer {

enum class OutputFormat { Json, Csv };

/// Settings shared by every check in a run.
struct RunConfig {
  SpaceKind space = SpaceKind::Circle;
  double t = 0.0;
  int lmax = 8;
  // "override": replaces every check's own tolerance when present
  std::map<std::string, double> tolerances;
  std::string output_path;
  std::uint64_t seed = 0;
  OutputFormat format = OutputFormat::Json;
};

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Throws ConfigError unless t > 0 and 1 <= lmax <= 64.
void validate(const RunConfig& cfg);

enum class Suite { Gutzmer, Stenzel, Sobolev, Weights, Growth, All };

std::string_view to_string(Suite s);
/// Throws ConfigError for unknown names.
Suite parse_suite(std::string_view name);

/// Runs every check of the suite in a fixed order. Random test functions are
/// drawn from std::mt19937_64 seeded from cfg.seed, so identical configs give
/// identical reports apart from runtime_ms.
std::vector<VerificationReport> run_suite(Suite suite, const RunConfig& cfg);

/// 0 if every report passes, 1 if any fails, 2 if the rest are only
/// LOW_CONFIDENCE or INCONCLUSIVE.
int exit_code(const std::vector<VerificationReport>& reports);

}  // namespace gutzmer
