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

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "gutzmer/space_model.hpp"

namespace gutzmer {

enum class Verdict { Pass, Fail, LowConfidence, Inconclusive };

std::string_view to_string(Verdict v);

/// Outcome of one identity check. Maps are ordered so serialization is
/// deterministic.
struct VerificationReport {
  std::string check_name;
  SpaceKind space = SpaceKind::Circle;
  std::map<std::string, double> params;
  std::vector<double> lhs;
  std::vector<double> rhs;
  double rel_error = 0.0;
  double tolerance = 0.0;
  std::map<std::string, double> fitted_constants;
  Verdict verdict = Verdict::Fail;
  std::string note;
  long long runtime_ms = 0;
};

/// PASS iff rel_error <= tolerance; a passing check computed from
/// unconverged quadrature is downgraded to LOW_CONFIDENCE.
Verdict judge(double rel_error, double tolerance, bool low_confidence);

/// Relative error |a - b| / max(|b|, floor).
double rel_diff(double a, double b, double floor = 1e-300);

class TruncationInsufficient : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotFound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gutzmer
