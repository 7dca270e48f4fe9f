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

#include <cmath>
#include <cstring>
#include <filesystem>
#include <limits>
#include <random>

#include "coeff_io.hpp"
#include "doctest.h"
#include "gutzmer/diagnostics.hpp"
#include "report_io.hpp"

using namespace gutzmer;
using cli::CoeffFile;

namespace {

bool bit_equal(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

}  // namespace

TEST_CASE("coefficient files round trip bit for bit") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> expo(-300.0, 300.0);
  for (auto kind : {SpaceKind::Circle, SpaceKind::Sphere2, SpaceKind::Su2Zonal}) {
    const auto sp = make_space(kind);
    SpectralCoeffs c(sp, 6);
    for (auto& z : c.data()) {
      z = {std::ldexp(std::uniform_real_distribution<double>(-1, 1)(rng), int(expo(rng))),
           std::uniform_real_distribution<double>(-1, 1)(rng) / 3.0};
    }
    c.at(0, 1) = {std::numeric_limits<double>::denorm_min(), -0.0};
    c.at(1, 1) = {0.1, 1.0 / 3.0};
    for (bool image : {false, true}) {
      const CoeffFile in{c, image ? std::optional<double>(0.1) : std::nullopt, image};
      const CoeffFile out = cli::parse_coeff_json(cli::dump_coeff_json(in));
      CHECK(out.image == image);
      CHECK(out.coeffs.space().kind == kind);
      CHECK(out.coeffs.lmax() == 6);
      REQUIRE(out.coeffs.data().size() == c.data().size());
      for (std::size_t i = 0; i < c.data().size(); ++i) {
        CHECK(bit_equal(out.coeffs.data()[i].real(), c.data()[i].real()));
        CHECK(bit_equal(out.coeffs.data()[i].imag(), c.data()[i].imag()));
      }
      if (image) CHECK(bit_equal(*out.t, 0.1));
    }
  }
}

TEST_CASE("file round trip") {
  const auto sp = make_space(SpaceKind::Sphere2);
  const auto c = random_coeffs(sp, 4, 3);
  const auto path = std::filesystem::temp_directory_path() / "gutzmer_coeff_roundtrip.json";
  cli::write_text(path, cli::dump_coeff_json({c, std::nullopt, false}));
  const auto back = cli::read_coeff_file(path);
  std::filesystem::remove(path);
  CHECK(std::equal(c.data().begin(), c.data().end(), back.coeffs.data().begin()));
}

TEST_CASE("malformed coefficient files") {
  using cli::ParseError;
  CHECK_THROWS_AS(cli::parse_coeff_json(""), ParseError);
  CHECK_THROWS_AS(cli::parse_coeff_json("   \n"), ParseError);
  CHECK_THROWS_AS(cli::parse_coeff_json("{"), ParseError);
  CHECK_THROWS_AS(cli::parse_coeff_json("[]"), ParseError);
  CHECK_THROWS_AS(cli::parse_coeff_json(R"({"space":"torus","lmax":0,"data":[[[1,0]]]})"),
                  ParseError);
  // lmax disagrees with data
  CHECK_THROWS_AS(cli::parse_coeff_json(R"({"space":"circle","lmax":1,"data":[[[1,0]]]})"),
                  ParseError);
  // lambda = 1 on the circle has two slots
  CHECK_THROWS_AS(
      cli::parse_coeff_json(R"({"space":"circle","lmax":1,"data":[[[1,0]],[[1,0]]]})"),
      ParseError);
  CHECK_THROWS_AS(cli::parse_coeff_json(R"({"space":"circle","lmax":0,"data":[[[1]]]})"),
                  ParseError);
  CHECK_THROWS_AS(cli::parse_coeff_json(R"({"space":"circle","lmax":0,"data":[[["a",0]]]})"),
                  ParseError);
  // image without t
  CHECK_THROWS_AS(
      cli::parse_coeff_json(R"({"space":"circle","lmax":0,"kind":"image","data":[[[1,0]]]})"),
      ParseError);
  CHECK_THROWS_AS(
      cli::parse_coeff_json(R"({"space":"circle","lmax":0,"kind":"other","data":[[[1,0]]]})"),
      ParseError);
  const auto ok = cli::parse_coeff_json(R"({"space":"circle","lmax":0,"data":[[[2.5,-1]]]})");
  CHECK(ok.coeffs.at(0, 1) == cplx(2.5, -1.0));
  CHECK_FALSE(ok.image);
}

TEST_CASE("missing files are I/O errors") {
  CHECK_THROWS_AS(cli::read_coeff_file("/nonexistent/dir/x.json"), cli::IoError);
  CHECK_THROWS_AS(cli::write_text("/nonexistent/dir/x.json", "x"), cli::IoError);
}

TEST_CASE("report serialization") {
  VerificationReport r;
  r.check_name = "demo";
  r.space = SpaceKind::Sphere2;
  r.params = {{"H", 0.5}, {"lmax", 8.0}};
  r.lhs = {1.0};
  r.rhs = {std::numeric_limits<double>::infinity()};
  r.rel_error = std::nan("");
  r.tolerance = 1e-6;
  r.verdict = Verdict::Inconclusive;
  r.note = "a, b";
  r.runtime_ms = 17;
  const auto j = cli::report_to_json(r);
  CHECK(j["check_name"] == "demo");
  CHECK(j["space"] == "sphere2");
  CHECK(j["verdict"] == "INCONCLUSIVE");
  CHECK(j["rhs"][0] == "inf");
  CHECK(j["rel_error"] == "nan");
  CHECK_FALSE(j.contains("runtime_ms"));

  RunConfig cfg;
  cfg.t = 0.25;
  const auto doc = cli::verify_document("gutzmer", cfg, {r}, 20);
  CHECK(doc["summary"]["exit_code"] == 2);
  CHECK(doc["timing"]["runtime_ms"][0] == 17);
  CHECK(doc["timing"]["total_ms"] == 20);

  const std::string csv = cli::reports_to_csv({r});
  const auto nl = csv.find('\n');
  REQUIRE(nl != std::string::npos);
  CHECK(csv.substr(0, 11) == "check_name,");
  CHECK(csv.find("H=0.5;lmax=8") != std::string::npos);
  CHECK(csv.find("\"a, b\"") != std::string::npos);
}
