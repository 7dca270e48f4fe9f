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

#include "coeff_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace gutzmer::cli {

using nlohmann::json;

CoeffFile parse_coeff_json(const std::string& text) {
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) throw ParseError("empty input");
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  try {
    const SpaceModel space = make_space(parse_space_kind(j.at("space").get<std::string>()));
    const int lmax = j.at("lmax").get<int>();
    if (lmax < 0) throw ParseError("lmax must be non-negative");
    CoeffFile out{SpectralCoeffs(space, lmax), std::nullopt, false};
    if (j.contains("t")) out.t = j.at("t").get<double>();
    if (j.contains("kind")) {
      const std::string kind = j.at("kind").get<std::string>();
      if (kind == "image") {
        out.image = true;
      } else if (kind != "preimage") {
        throw ParseError("kind must be 'image' or 'preimage'");
      }
    }
    if (out.image && !out.t) throw ParseError("an image file needs t");
    const json& data = j.at("data");
    if (!data.is_array() || data.size() != static_cast<std::size_t>(lmax) + 1) {
      throw ParseError("data must hold lmax + 1 bands");
    }
    for (int l = 0; l <= lmax; ++l) {
      const json& band = data[l];
      if (!band.is_array() || band.size() != static_cast<std::size_t>(slot_count(space, l))) {
        throw ParseError("band " + std::to_string(l) + " has the wrong number of slots");
      }
      for (int s = 0; s < slot_count(space, l); ++s) {
        const json& v = band[s];
        if (!v.is_array() || v.size() != 2) throw ParseError("coefficients are [re, im] pairs");
        out.coeffs.at(l, s + 1) = {v[0].get<double>(), v[1].get<double>()};
      }
    }
    return out;
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad coefficient file: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::string dump_coeff_json(const CoeffFile& file) {
  const SpectralCoeffs& c = file.coeffs;
  json j;
  j["space"] = std::string(to_string(c.space().kind));
  j["lmax"] = c.lmax();
  if (file.t) j["t"] = *file.t;
  j["kind"] = file.image ? "image" : "preimage";
  json data = json::array();
  for (int l = 0; l <= c.lmax(); ++l) {
    json band = json::array();
    for (int s = 1; s <= c.layout().slots(l); ++s) {
      band.push_back({c.at(l, s).real(), c.at(l, s).imag()});
    }
    data.push_back(std::move(band));
  }
  j["data"] = std::move(data);
  // nlohmann prints the shortest decimal that reads back to the same double
  return j.dump(1) + "\n";
}

CoeffFile read_coeff_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_coeff_json(ss.str());
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
  out.flush();
  if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace gutzmer::cli
