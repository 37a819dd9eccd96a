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

#ifndef BDICKE_TOOLS_CLI_HPP
#define BDICKE_TOOLS_CLI_HPP

#include <iosfwd>
#include <json.hpp>
#include <stdexcept>
#include <string>
#include <vector>

#include "config.hpp"

namespace bdicke_cli {

enum ExitCode { kExitOk = 0, kExitConfig = 2, kExitNumerical = 3 };

// A library call failed on valid input; maps to exit code 3.
struct NumericalFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
  nlohmann::json meta = nlohmann::json::object();  // merged into the sidecar
};

// Computes the table for a validated config. Throws ConfigError or NumericalFailure.
Table run(const RunConfig& cfg);

void write_csv(std::ostream& os, const Table& table);
nlohmann::json sidecar(const RunConfig& cfg, const Table& table);

// Full command line entry point; returns the process exit code.
int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace bdicke_cli

#endif
