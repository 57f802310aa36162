// Copyright 2026 The Authors.
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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "json.hpp"
#include "lorentz/poly_json.hpp"

namespace lorentz::cli {
namespace {

namespace fs = std::filesystem;

const fs::path kGolden = LORENTZ_GOLDEN_DIR;

std::string slurp(const fs::path& path) {
  std::ifstream in(path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  for (std::string& a : args) {
    if (a.ends_with(".json") && !a.starts_with("/")) a = (kGolden / "inputs" / a).string();
  }
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

struct GoldenCase {
  std::string name;
  int code;
  std::vector<std::string> args;
};

void PrintTo(const GoldenCase& c, std::ostream* os) { *os << c.name; }

std::vector<GoldenCase> golden_cases() {
  std::vector<GoldenCase> cases;
  std::ifstream in(kGolden / "cases.txt");
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream words(line);
    GoldenCase c;
    if (!(words >> c.name >> c.code)) continue;
    for (std::string w; words >> w;) c.args.push_back(w);
    cases.push_back(c);
  }
  return cases;
}

class Golden : public ::testing::TestWithParam<GoldenCase> {};

TEST_P(Golden, MatchesPinnedOutput) {
  const GoldenCase& c = GetParam();
  const Outcome o = invoke(c.args);
  EXPECT_EQ(o.code, c.code) << o.err;
  EXPECT_EQ(o.out, slurp(kGolden / (c.name + ".out")));
}

INSTANTIATE_TEST_SUITE_P(Cli, Golden, ::testing::ValuesIn(golden_cases()),
                         [](const auto& info) { return info.param.name; });

TEST(Cli, CertifyElementary) {
  const Outcome o = invoke({"certify", "--input", "e2_3.json"});
  EXPECT_EQ(o.code, kExitOk);
  EXPECT_EQ(nlohmann::json::parse(o.out).at("verdict"), "StrictInterior");
}

TEST(Cli, StableRejectionCarriesDirection) {
  const Outcome o = invoke({"certify", "--input", "squares.json", "--mode", "stable"});
  EXPECT_EQ(o.code, kExitRejected);
  const auto j = nlohmann::json::parse(o.out);
  EXPECT_EQ(j.at("verdict"), "Rejected");
  EXPECT_EQ(j.at("witness").at("type"), "direction");
  EXPECT_EQ(j.at("seed"), kDefaultSeed);
}

TEST(Cli, FlowMatchesSpectralExample) {
  const Outcome o = invoke({"flow", "--input", "w1.json", "--times", "0,1"});
  ASSERT_EQ(o.code, kExitOk);
  std::istringstream csv(o.out);
  std::string header, first, second;
  std::getline(csv, header);
  std::getline(csv, first);
  std::getline(csv, second);
  EXPECT_EQ(header, "time,w1,w2,w3,centered_norm,verdict");
  EXPECT_TRUE(first.starts_with("0,1,0,0,"));
  std::vector<double> values;
  std::istringstream row(second);
  for (std::string cell; std::getline(row, cell, ',');) {
    if (cell.find_first_not_of("0123456789.e-+") == std::string::npos) {
      values.push_back(std::stod(cell));
    }
  }
  const double e = std::exp(-1.0);
  ASSERT_GE(values.size(), 4u);
  EXPECT_NEAR(values[1], 1.0 / 3 + 2 * e / 3, 1e-15);
  EXPECT_NEAR(values[2], 1.0 / 3 - e / 3, 1e-15);
  EXPECT_NEAR(values[3], 1.0 / 3 - e / 3, 1e-15);
}

TEST(Cli, Errors) {
  EXPECT_EQ(invoke({"certify", "--input", "missing.json"}).code, kExitError);
  const Outcome schema = invoke({"certify", "--input", "bad_coeff.json"});
  EXPECT_EQ(schema.code, kExitError);
  EXPECT_NE(schema.err.find("terms[0].coeff"), std::string::npos);
  EXPECT_EQ(invoke({"certify"}).code, kExitError);
  EXPECT_EQ(invoke({"certify", "--input", "e2_3.json", "--tol", "-1"}).code, kExitError);
  EXPECT_EQ(invoke({"certify", "--input", "e2_3.json", "--mode", "other"}).code, kExitError);
  EXPECT_EQ(invoke({"spectrum", "--n", "2", "--d", "1"}).code, kExitRejected);
  EXPECT_EQ(invoke({"flow", "--input", "squares.json"}).code, kExitError);
  EXPECT_EQ(invoke({"frobnicate"}).code, kExitError);
  EXPECT_EQ(invoke({}).code, kExitError);
  EXPECT_EQ(invoke({"--help"}).code, kExitOk);
}

TEST(Cli, SampleIsDeterministicAndCertified) {
  const std::vector<std::string> args{"sample", "--n", "3", "--d", "2", "--seed", "5",
                                      "--count", "4"};
  const Outcome a = invoke(args);
  const Outcome b = invoke(args);
  ASSERT_EQ(a.code, kExitOk);
  EXPECT_EQ(a.out, b.out);
  const auto polys = nlohmann::json::parse(a.out);
  ASSERT_EQ(polys.size(), 4u);
  for (const auto& p : polys) {
    EXPECT_TRUE(certify_stable(poly_from_json(p)).member());
  }
  EXPECT_NE(a.out, invoke({"sample", "--n", "3", "--d", "2", "--seed", "6", "--count", "4"}).out);
}

TEST(Cli, SampleInteriorFilesAreStrict) {
  const fs::path dir = fs::temp_directory_path() / "lorentz_cli_sample_test";
  fs::remove_all(dir);
  const Outcome o = invoke({"sample", "--n", "2", "--d", "3", "--seed", "9", "--count", "3",
                            "--interior", "--output-dir", dir.string()});
  ASSERT_EQ(o.code, kExitOk);
  int files = 0;
  for (const auto& entry : fs::directory_iterator(dir)) {
    ++files;
    const Outcome c = invoke({"certify", "--input", entry.path().string(), "--mode", "stable"});
    EXPECT_EQ(nlohmann::json::parse(c.out).at("verdict"), "StrictInterior");
  }
  EXPECT_EQ(files, 3);
  fs::remove_all(dir);
}

TEST(Cli, OutputFile) {
  const fs::path file = fs::temp_directory_path() / "lorentz_cli_output_test.json";
  const Outcome o = invoke({"certify", "--input", "e2_3.json", "-o", file.string()});
  EXPECT_EQ(o.code, kExitOk);
  EXPECT_TRUE(o.out.empty());
  EXPECT_EQ(slurp(file), slurp(kGolden / "certify_e2_3.out"));
  fs::remove(file);
}

TEST(Cli, PolarizeRoundTrip) {
  const fs::path file = fs::temp_directory_path() / "lorentz_cli_lifted.json";
  ASSERT_EQ(invoke({"polarize", "--input", "capped.json", "-o", file.string()}).code, kExitOk);
  const Outcome down =
      invoke({"polarize", "--input", file.string(), "--direction", "down", "--kappa", "2,1"});
  EXPECT_EQ(down.code, kExitOk);
  const HomPoly back = parse_poly(down.out);
  const HomPoly original = read_poly_file((kGolden / "inputs" / "capped.json").string());
  for (const auto& [alpha, c] : original.terms()) EXPECT_NEAR(back.coeff(alpha), c, 1e-15);
  EXPECT_EQ(invoke({"polarize", "--input", file.string(), "--direction", "down"}).code,
            kExitError);
  fs::remove(file);
}

}  // namespace
}  // namespace lorentz::cli
