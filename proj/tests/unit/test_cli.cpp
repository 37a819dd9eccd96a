// Copyright 2026 The bdicke Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace {

struct CliRun {
  int code;
  std::string out, err;
};

CliRun cli(std::vector<std::string> args) {
  args.insert(args.begin(), "bdicke");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  const int code = bdicke_cli::main_entry(int(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream is(s);
  for (std::string l; std::getline(is, l);) v.push_back(l);
  return v;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "bdicke_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

TEST(Cli, MissingSubcommandIsConfigError) { EXPECT_EQ(cli({}).code, 2); }

TEST(Cli, UnknownFlagIsConfigError) { EXPECT_EQ(cli({"co", "--bogus", "1"}).code, 2); }

TEST(Cli, MalformedRangeIsConfigError) {
  EXPECT_EQ(cli({"co", "--kappa", "1:2"}).code, 2);
  EXPECT_EQ(cli({"co", "--kappa", "abc"}).code, 2);
}

TEST(Cli, TwoSweptAxesRejected) {
  const auto r = cli({"co", "--kappa", "0:1:5", "--eps-prime", "0:0.1:3"});
  EXPECT_EQ(r.code, 2);
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, InvalidParameterIsConfigError) { EXPECT_EQ(cli({"co", "--omega", "-1"}).code, 2); }

TEST(Cli, MeanfieldListsThreeRootsAboveThreshold) {
  const auto r = cli({"meanfield", "--kappa", "2", "--eps-prime", "0.11"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto l = lines(r.out);
  ASSERT_EQ(l.size(), 4u);
  EXPECT_EQ(l[0].rfind("omega,Omega,eps_prime,kappa,n_atoms,alpha0,", 0), 0u) << l[0];
}

TEST(Cli, SweepHasOneRowPerStableBranch) {
  // Single branch below the three-root threshold, two above it.
  auto r = cli({"co", "--kappa", "0:1:11"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(lines(r.out).size(), 12u);
  r = cli({"co", "--kappa", "2:3:4"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(lines(r.out).size(), 9u);
}

TEST(Cli, OutputIndependentOfThreadCount) {
  const auto a = cli({"co", "--kappa", "0:3:31", "--threads", "1"});
  const auto b = cli({"co", "--kappa", "0:3:31", "--threads", "4"});
  ASSERT_EQ(a.code, 0);
  ASSERT_EQ(b.code, 0);
  EXPECT_EQ(a.out, b.out);
  const auto c = cli({"exact", "--kappa", "0.3:0.6:3", "--Omega", "20", "--n-atoms", "2", "--threads", "1"});
  const auto d = cli({"exact", "--kappa", "0.3:0.6:3", "--Omega", "20", "--n-atoms", "2", "--threads", "3"});
  ASSERT_EQ(c.code, 0) << c.err;
  EXPECT_EQ(c.out, d.out);
}

TEST(Cli, UnconvergedExactIsNumericalFailure) {
  const auto r = cli({"exact", "--kappa", "2", "--cutoff-max", "64"});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("numerical"), std::string::npos);
}

TEST(Cli, UnwritableOutputIsConfigError) {
  EXPECT_EQ(cli({"co", "--out", "/nonexistent_dir/x.csv"}).code, 2);
}

TEST(Cli, FlagsOverrideConfigFileAndSidecarRecordsResult) {
  const auto cfg = scratch("cfg.json");
  std::ofstream(cfg) << R"({"kappa": 0.5, "Omega": 20, "eps_prime": 0.2})";
  const auto out = scratch("co.csv");
  const auto r = cli({"co", "--config", cfg.string(), "--kappa", "0.7", "--out", out.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto side = nlohmann::json::parse(slurp(out.string() + ".json"));
  const auto& c = side.at("config");
  EXPECT_EQ(std::stod(c.at("kappa").get<std::string>()), 0.7);
  EXPECT_EQ(std::stod(c.at("Omega").get<std::string>()), 20);
  EXPECT_EQ(std::stod(c.at("eps_prime").get<std::string>()), 0.2);
  const auto l = lines(slurp(out));
  ASSERT_EQ(l.size(), 2u);
  EXPECT_EQ(l[1].rfind("1,20,0.20000000000000001,0.69999999999999996,", 0), 0u) << l[1];
}

TEST(Cli, BadConfigFileIsConfigError) {
  const auto cfg = scratch("bad.json");
  std::ofstream(cfg) << R"({"kappa": )";
  EXPECT_EQ(cli({"co", "--config", cfg.string()}).code, 2);
  std::ofstream(cfg) << R"({"colour": 1})";
  EXPECT_EQ(cli({"co", "--config", cfg.string()}).code, 2);
  EXPECT_EQ(cli({"co", "--config", scratch("missing.json").string()}).code, 2);
}

TEST(Cli, UnknownFigureIsConfigError) { EXPECT_EQ(cli({"figure", "fig9"}).code, 2); }

TEST(Cli, FigureShapes) {
  struct Shape {
    const char* name;
    size_t rows, columns;
  };
  for (const Shape& s : {Shape{"fig1", 1001, 5}, Shape{"fig4", 201 * 61, 3}, Shape{"fig6", 301, 13}}) {
    const auto r = cli({"figure", s.name});
    ASSERT_EQ(r.code, 0) << s.name << ": " << r.err;
    const auto l = lines(r.out);
    ASSERT_EQ(l.size(), s.rows + 1) << s.name;
    EXPECT_EQ(size_t(std::count(l[0].begin(), l[0].end(), ',')) + 1, s.columns) << s.name;
  }
}

}  // namespace
