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

#include "report_io.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <sstream>

namespace gutzmer::cli {

using nlohmann::json;

namespace {

// JSON has no inf or nan; spell them as strings rather than null.
json number(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "inf" : "-inf";
}

json number_map(const std::map<std::string, double>& m) {
  json j = json::object();
  for (const auto& [k, v] : m) j[k] = number(v);
  return j;
}

json number_array(const std::vector<double>& v) {
  json j = json::array();
  for (double x : v) j.push_back(number(x));
  return j;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string flatten(const std::map<std::string, double>& m) {
  std::string out;
  for (const auto& [k, v] : m) {
    if (!out.empty()) out += ';';
    out += k + "=" + fmt(v);
  }
  return out;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

json report_to_json(const VerificationReport& r) {
  json j;
  j["check_name"] = r.check_name;
  j["space"] = std::string(to_string(r.space));
  j["params"] = number_map(r.params);
  j["lhs"] = number_array(r.lhs);
  j["rhs"] = number_array(r.rhs);
  j["rel_error"] = number(r.rel_error);
  j["tolerance"] = number(r.tolerance);
  j["fitted_constants"] = number_map(r.fitted_constants);
  j["verdict"] = std::string(to_string(r.verdict));
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

json verify_document(std::string_view suite, const RunConfig& cfg,
                     const std::vector<VerificationReport>& reports, long long total_ms) {
  json doc;
  doc["command"] = "verify";
  doc["suite"] = std::string(suite);
  doc["config"] = {{"space", std::string(to_string(cfg.space))},
                   {"t", cfg.t},
                   {"lmax", cfg.lmax},
                   {"seed", cfg.seed},
                   {"tolerances", number_map(cfg.tolerances)}};
  json arr = json::array();
  std::map<std::string, int> counts;
  json runtimes = json::array();
  for (const auto& r : reports) {
    arr.push_back(report_to_json(r));
    ++counts[std::string(to_string(r.verdict))];
    runtimes.push_back(r.runtime_ms);
  }
  doc["reports"] = std::move(arr);
  doc["summary"] = {{"checks", reports.size()}, {"verdicts", counts}, {"exit_code", exit_code(reports)}};
  doc["timing"] = {{"timestamp", utc_timestamp()}, {"total_ms", total_ms}, {"runtime_ms", runtimes}};
  return doc;
}

std::string reports_to_csv(const std::vector<VerificationReport>& reports) {
  std::ostringstream out;
  out << "check_name,space,verdict,rel_error,tolerance,params,fitted_constants,note,runtime_ms\n";
  for (const auto& r : reports) {
    out << csv_field(r.check_name) << ',' << to_string(r.space) << ',' << to_string(r.verdict)
        << ',' << fmt(r.rel_error) << ',' << fmt(r.tolerance) << ',' << csv_field(flatten(r.params))
        << ',' << csv_field(flatten(r.fitted_constants)) << ',' << csv_field(r.note) << ','
        << r.runtime_ms << '\n';
  }
  return out.str();
}

}  // namespace gutzmer::cli
