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

// Drives the gutzmer executable and checks exit codes and outputs.

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const fs::path kDir = fs::temp_directory_path() / "gutzmer_cli_test";

struct Run {
  int code;
  std::string out, err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Run run(const std::string& args) {
  fs::create_directories(kDir);
  const auto out = kDir / "stdout", err = kDir / "stderr";
  const std::string cmd = std::string(GUTZMER_CLI) + " " + args + " >" + out.string() + " 2>" +
                          err.string();
  const int status = std::system(cmd.c_str());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out), slurp(err)};
}

json strip_timing(json j) {
  j.erase("timing");
  return j;
}

}  // namespace

TEST_CASE("missing --t is a usage error") {
  const auto r = run("verify gutzmer --space circle --lmax 32");
  CHECK(r.code == 64);
  CHECK(r.err.find("--t") != std::string::npos);
  CHECK(r.err.find("Usage") != std::string::npos);
}

TEST_CASE("bad configuration exits 64") {
  CHECK(run("verify gutzmer --t 0").code == 64);
  CHECK(run("verify gutzmer --t -0.5").code == 64);
  CHECK(run("verify gutzmer --t 0.2 --lmax 0").code == 64);
  CHECK(run("verify gutzmer --t 0.2 --space torus").code == 64);
  CHECK(run("verify everything --t 0.2").code == 64);
  CHECK(run("verify gutzmer --t 0.2 --format xml").code == 64);
  CHECK(run("").code == 64);
}

TEST_CASE("help documents flags and environment") {
  const auto r = run("--help");
  CHECK(r.code == 0);
  CHECK(r.out.find("GUTZMER_MAX_NODES") != std::string::npos);
  const auto v = run("verify --help");
  for (const char* flag : {"--space", "--t", "--lmax", "--tol", "--seed", "--out", "--format"}) {
    CHECK_MESSAGE(v.out.find(flag) != std::string::npos, flag);
  }
}

TEST_CASE("circle gutzmer suite exits 0 and writes a report file") {
  const auto path = kDir / "gutzmer.json";
  fs::create_directories(kDir);
  fs::remove(path);
  const auto r = run("verify gutzmer --space circle --t 0.2 --lmax 32 --out " + path.string());
  CHECK(r.code == 0);
  const auto doc = json::parse(slurp(path));
  CHECK(doc["summary"]["exit_code"] == 0);
  CHECK(doc["config"]["lmax"] == 32);
  for (const auto& rep : doc["reports"]) CHECK(rep["verdict"] == "PASS");
}

TEST_CASE("a zero tolerance forces a failing exit") {
  CHECK(run("verify gutzmer --space circle --t 0.2 --lmax 8 --tol 0").code == 1);
}

TEST_CASE("reports are deterministic apart from timing") {
  const auto a = run("verify stenzel --space su2 --t 0.25 --seed 3");
  const auto b = run("verify stenzel --space su2 --t 0.25 --seed 3");
  REQUIRE(a.code == 0);
  REQUIRE(b.code == 0);
  CHECK(strip_timing(json::parse(a.out)).dump() == strip_timing(json::parse(b.out)).dump());
  CHECK(json::parse(a.out).contains("timing"));
}

TEST_CASE("csv output") {
  const auto r = run("verify sobolev --space circle --t 0.25 --format csv");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("check_name,space,verdict", 0) == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') >= 5);
}

TEST_CASE("transform builtin delta on the circle") {
  const auto out = kDir / "delta.json";
  const auto prof = kDir / "profile.csv";
  const auto r = run("transform delta --space circle --t 0.1 --lmax 10 --out " + out.string() +
                     " --profile " + prof.string());
  REQUIRE(r.code == 0);
  const auto doc = json::parse(slurp(out));
  CHECK(doc["kind"] == "image");
  CHECK(doc["t"] == 0.1);
  for (int n = 0; n <= 10; ++n) {
    for (const auto& slot : doc["data"][n]) {
      CHECK(slot[0].get<double>() == doctest::Approx(std::exp(-0.1 * n * n)).epsilon(1e-15));
      CHECK(slot[1].get<double>() == 0.0);
    }
  }
  std::istringstream rows(slurp(prof));
  std::string line;
  std::getline(rows, line);
  CHECK(line == "H,log_sup_abs,envelope_residual");
  double prev = -1.0;
  int count = 0;
  while (std::getline(rows, line)) {
    const double h = std::stod(line.substr(0, line.find(',')));
    CHECK(h > prev);
    prev = h;
    ++count;
  }
  CHECK(count > 10);
}

TEST_CASE("transform of a preimage file matches the builtin") {
  const auto pre = kDir / "pre.json";
  std::ofstream(pre) << R"({"space":"circle","lmax":2,"data":[[[1,0]],[[1,0],[1,0]],[[1,0],[1,0]]]})";
  const auto a = run("transform " + pre.string() + " --space circle --t 0.3");
  const auto b = run("transform delta --space circle --t 0.3 --lmax 2");
  REQUIRE(a.code == 0);
  REQUIRE(b.code == 0);
  CHECK(json::parse(a.out)["data"] == json::parse(b.out)["data"]);
  // an exported image reads back unchanged
  const auto img = kDir / "img.json";
  std::ofstream(img) << a.out;
  const auto c = run("transform " + img.string() + " --space circle --t 0.3");
  REQUIRE(c.code == 0);
  CHECK(c.out == a.out);
}

TEST_CASE("input errors") {
  const auto empty = kDir / "empty.json";
  fs::create_directories(kDir);
  std::ofstream(empty).close();
  CHECK(run("classify " + empty.string() + " --t 0.25").code == 65);
  CHECK(run("transform " + empty.string() + " --t 0.25").code == 65);
  CHECK(run("classify '' --t 0.25").code == 65);
  const auto bad = kDir / "bad.json";
  std::ofstream(bad) << "{\"space\": \"circle\", \"lmax\": 3";
  CHECK(run("transform " + bad.string() + " --t 0.25").code == 65);
  CHECK(run("transform " + (kDir / "missing.json").string() + " --t 0.25").code == 74);
  CHECK(run("verify gutzmer --t 0.25 --lmax 4 --out /nonexistent/dir/r.json").code == 74);
}

TEST_CASE("classify builtins") {
  const auto d = run("classify delta --space circle --t 0.25");
  REQUIRE(d.code == 0);
  const auto dj = json::parse(d.out);
  CHECK(dj["distribution"]["verdict"] == "DISTRIBUTION_CONSISTENT");
  CHECK(dj["smooth"]["verdict"] != "SMOOTH_CONSISTENT");
  const auto g = run("classify gaussian-coeff --space circle --t 0.25");
  REQUIRE(g.code == 0);
  CHECK(json::parse(g.out)["smooth"]["verdict"] == "SMOOTH_CONSISTENT");
}
