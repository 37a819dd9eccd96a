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

#include "cli.hpp"

#include <bdicke/bdicke.h>

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>

namespace bdicke_cli {

namespace {

struct Flags {
  std::map<std::string, std::string> ranges;  // flag name -> text
  std::optional<int> cutoff_max, threads, gaps;
  std::optional<double> tol_energy, tol_tail;
  std::optional<std::string> out, config;
  std::string figure;
};

const std::pair<const char*, const char*> kRangeFlags[] = {
    {"omega", "--omega"},     {"Omega", "--Omega"},     {"eps_prime", "--eps-prime"},
    {"kappa", "--kappa"},     {"n_atoms", "--n-atoms"}, {"alpha0", "--alpha0"}};

void add_common(CLI::App* sub, Flags& f) {
  for (const auto& [key, flag] : kRangeFlags) {
    sub->add_option_function<std::string>(
        flag, [&f, key = std::string(key)](const std::string& v) { f.ranges[key] = v; },
        "value or start:stop:count[:log]");
  }
  sub->add_option("--cutoff-max", f.cutoff_max, "hard Fock cutoff limit (default 4096)");
  sub->add_option("--tol-energy", f.tol_energy, "ground-energy tolerance in units of omega");
  sub->add_option("--tol-tail", f.tol_tail, "Fock tail population tolerance");
  sub->add_option("--threads", f.threads, "worker threads (default: hardware)");
  sub->add_option("--gaps", f.gaps, "gap columns in exact mode (default 10)");
  sub->add_option("--out", f.out, "CSV path, '-' for stdout; the sidecar goes to <out>.json");
  sub->add_option("--config", f.config, "JSON config file; flags override it");
}

RunConfig resolve(const std::string& mode, const Flags& f) {
  RunConfig cfg;
  cfg.mode = mode;
  cfg.figure = f.figure;
  if (mode == "scaling") cfg.eps_prime = Range::parse("1e-7:1e-3:20:log");
  if (mode == "scaling") cfg.Omega = Range::scalar(1.0);
  if (f.config) {
    std::ifstream in(*f.config);
    if (!in) throw ConfigError("cannot read config file '" + *f.config + "'");
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError("config file '" + *f.config + "': " + e.what());
    }
    apply_json(cfg, j);
  }
  for (const auto& [key, text] : f.ranges) {
    const Range r = Range::parse(text);
    if (key == "omega") cfg.omega = r;
    else if (key == "Omega") cfg.Omega = r;
    else if (key == "eps_prime") cfg.eps_prime = r;
    else if (key == "kappa") cfg.kappa = r;
    else if (key == "n_atoms") cfg.n_atoms = r;
    else if (key == "alpha0") cfg.alpha0 = r;
  }
  if (f.cutoff_max) cfg.cutoff_max = *f.cutoff_max;
  if (f.tol_energy) cfg.tol_energy = *f.tol_energy;
  if (f.tol_tail) cfg.tol_tail = *f.tol_tail;
  if (f.threads) cfg.threads = *f.threads;
  if (f.gaps) cfg.gaps = *f.gaps;
  if (f.out) cfg.out = *f.out;
  cfg.validate();
  return cfg;
}

}  // namespace

int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Biased Dicke model: mean field, effective limits and exact spectra"};
  app.set_version_flag("--version", std::string(bdicke_version()));
  app.require_subcommand(1);
  Flags flags;
  const char* modes[][2] = {{"meanfield", "self-consistent mean-field roots"},
                            {"co", "effective oscillator limit (omega', xi, beta, gamma)"},
                            {"cs", "spin-limit normal modes and variances"},
                            {"exact", "exact diagonalization with cutoff convergence"},
                            {"scaling", "critical scaling fit at kappa = 1 over an eps-prime grid"},
                            {"figure", "named figure preset fig1..fig6"}};
  for (const auto& m : modes) {
    CLI::App* sub = app.add_subcommand(m[0], m[1]);
    add_common(sub, flags);
    if (std::string(m[0]) == "figure") sub->add_option("name", flags.figure, "fig1..fig6")->required();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  const std::string mode = app.get_subcommands().front()->get_name();
  try {
    const RunConfig cfg = resolve(mode, flags);
    std::ofstream csv_file, json_file;
    if (cfg.out != "-") {
      csv_file.open(cfg.out, std::ios::binary);
      json_file.open(cfg.out + ".json", std::ios::binary);
      if (!csv_file || !json_file) throw ConfigError("cannot write output path '" + cfg.out + "'");
    }
    const Table table = run(cfg);
    if (cfg.out == "-") {
      write_csv(out, table);
    } else {
      write_csv(csv_file, table);
      json_file << sidecar(cfg, table).dump(2) << '\n';
      if (!csv_file || !json_file) throw ConfigError("failed writing '" + cfg.out + "'");
    }
    return kExitOk;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const NumericalFailure& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  }
}

}  // namespace bdicke_cli
