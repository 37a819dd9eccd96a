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

#ifndef BDICKE_TOOLS_CONFIG_HPP
#define BDICKE_TOOLS_CONFIG_HPP

#include <json.hpp>
#include <stdexcept>
#include <string>
#include <vector>

namespace bdicke_cli {

// Bad configuration; maps to exit code 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Scalar "v" or sweep "start:stop:count[:log]".
struct Range {
  double start = 0.0;
  double stop = 0.0;
  int count = 1;
  bool log = false;

  static Range scalar(double v) { return {v, v, 1, false}; }
  static Range parse(const std::string& text);
  std::vector<double> values() const;
  std::string to_string() const;
};

struct RunConfig {
  std::string mode;    // meanfield, co, cs, exact, scaling, figure
  std::string figure;  // fig1..fig6 for mode=figure
  Range omega = Range::scalar(1.0);
  Range Omega = Range::scalar(60.0);
  Range eps_prime = Range::scalar(0.11);
  Range kappa = Range::scalar(1.0);
  Range n_atoms = Range::scalar(5);
  Range alpha0 = Range::scalar(0.0);
  int cutoff_max = 4096;
  double tol_energy = 1e-10;
  double tol_tail = 1e-10;
  int threads = 0;  // 0: hardware concurrency
  int gaps = 10;    // gap columns in exact mode
  std::string out = "-";

  // Throws ConfigError.
  void validate() const;
  nlohmann::json to_json() const;
};

// Applies the keys of a JSON config object onto `cfg`.
void apply_json(RunConfig& cfg, const nlohmann::json& j);

}  // namespace bdicke_cli

#endif
