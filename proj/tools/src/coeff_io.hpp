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

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>

#include "gutzmer/transform.hpp"

namespace gutzmer::cli {

/// Malformed input (exit 65).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// File could not be read or written (exit 74).
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Contents of a coefficient file:
///   {"space": "sphere2", "lmax": 4, "t": 0.1, "kind": "image",
///    "data": [[[re, im], ...], ...]}
/// data holds one array of slots per lambda. kind is "preimage" (default)
/// or "image"; an image file must carry t.
struct CoeffFile {
  SpectralCoeffs coeffs;
  std::optional<double> t;
  bool image = false;
};

CoeffFile parse_coeff_json(const std::string& text);
std::string dump_coeff_json(const CoeffFile& file);

CoeffFile read_coeff_file(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace gutzmer::cli
