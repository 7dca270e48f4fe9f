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

#include <string>
#include <vector>

#include "json.hpp"

#include "gutzmer/report.hpp"
#include "gutzmer/suites.hpp"

namespace gutzmer::cli {

/// One report without its runtime, which lives under the document's
/// "timing" key so the rest is reproducible byte for byte.
nlohmann::json report_to_json(const VerificationReport& r);

/// {"command", "suite", "config", "reports", "summary", "timing"}.
nlohmann::json verify_document(std::string_view suite, const RunConfig& cfg,
                               const std::vector<VerificationReport>& reports,
                               long long total_ms);

/// One row per report; maps flattened as key=value;key=value.
std::string reports_to_csv(const std::vector<VerificationReport>& reports);

}  // namespace gutzmer::cli
