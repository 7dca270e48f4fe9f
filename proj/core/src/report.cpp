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

#include "gutzmer/report.hpp"

#include <algorithm>
#include <cmath>

namespace gutzmer {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "PASS";
    case Verdict::Fail:
      return "FAIL";
    case Verdict::LowConfidence:
      return "LOW_CONFIDENCE";
    case Verdict::Inconclusive:
      return "INCONCLUSIVE";
  }
  return "FAIL";
}

Verdict judge(double rel_error, double tolerance, bool low_confidence) {
  if (!std::isfinite(rel_error) || rel_error > tolerance) return Verdict::Fail;
  return low_confidence ? Verdict::LowConfidence : Verdict::Pass;
}

double rel_diff(double a, double b, double floor) {
  return std::abs(a - b) / std::max(std::abs(b), floor);
}

}  // namespace gutzmer
