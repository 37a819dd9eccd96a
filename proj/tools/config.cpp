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

#include "config.hpp"

#include <cmath>
#include <sstream>

namespace bdicke_cli {

namespace {

double parse_number(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("cannot parse " + what + " '" + s + "'");
  }
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

Range range_from_json(const nlohmann::json& v, const std::string& key) {
  if (v.is_number()) return Range::scalar(v.get<double>());
  if (v.is_string()) return Range::parse(v.get<std::string>());
  throw ConfigError("config key '" + key + "' must be a number or a range string");
}

}  // namespace

Range Range::parse(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  if (!text.empty() && text.back() == ':') parts.push_back("");
  if (parts.size() == 1) return scalar(parse_number(parts[0], "value"));
  if (parts.size() < 3 || parts.size() > 4) {
    throw ConfigError("range '" + text + "' must be start:stop:count[:log]");
  }
  Range r;
  r.start = parse_number(parts[0], "range start");
  r.stop = parse_number(parts[1], "range stop");
  const double c = parse_number(parts[2], "range count");
  if (c != std::floor(c) || c < 1 || c > 1e7) throw ConfigError("range count must be an integer >= 1");
  r.count = int(c);
  if (parts.size() == 4) {
    if (parts[3] == "log") r.log = true;
    else if (parts[3] != "lin") throw ConfigError("range spacing must be 'lin' or 'log'");
  }
  if (!(r.start <= r.stop)) throw ConfigError("range '" + text + "' needs start <= stop");
  if (r.log && !(r.start > 0)) throw ConfigError("log range '" + text + "' needs start > 0");
  return r;
}

std::vector<double> Range::values() const {
  if (count == 1) return {start};
  std::vector<double> v(count);
  for (int i = 0; i < count; ++i) {
    const double t = double(i) / (count - 1);
    v[i] = log ? start * std::pow(stop / start, t) : start + (stop - start) * t;
  }
  v.back() = stop;
  return v;
}

std::string Range::to_string() const {
  if (count == 1) return fmt(start);
  return fmt(start) + ":" + fmt(stop) + ":" + std::to_string(count) + (log ? ":log" : "");
}

void RunConfig::validate() const {
  int swept = 0;
  for (const Range* r : {&omega, &Omega, &eps_prime, &kappa, &n_atoms, &alpha0}) {
    if (r->count > 1) ++swept;
    for (double v : r->values()) {
      if (!std::isfinite(v)) throw ConfigError("non-finite parameter value");
    }
  }
  if (mode != "figure" && swept > 1) {
    throw ConfigError("at most one parameter may be swept (got " + std::to_string(swept) + ")");
  }
  for (double v : n_atoms.values()) {
    if (v != std::floor(v) || v < 1) throw ConfigError("n-atoms must be integers >= 1");
  }
  if (cutoff_max < 32) throw ConfigError("cutoff-max must be >= 32");
  if (!(tol_energy > 0) || !(tol_tail > 0)) throw ConfigError("tolerances must be > 0");
  if (threads < 0) throw ConfigError("threads must be >= 0");
  if (gaps < 1) throw ConfigError("gaps must be >= 1");
}

nlohmann::json RunConfig::to_json() const {
  return {{"mode", mode},
          {"figure", figure},
          {"omega", omega.to_string()},
          {"Omega", Omega.to_string()},
          {"eps_prime", eps_prime.to_string()},
          {"kappa", kappa.to_string()},
          {"n_atoms", n_atoms.to_string()},
          {"alpha0", alpha0.to_string()},
          {"cutoff_max", cutoff_max},
          {"tol_energy", tol_energy},
          {"tol_tail", tol_tail},
          {"gaps", gaps},
          {"threads", threads},
          {"out", out}};
}

void apply_json(RunConfig& cfg, const nlohmann::json& j) {
  if (!j.is_object()) throw ConfigError("config file must hold a JSON object");
  for (const auto& [key, v] : j.items()) {
    try {
      if (key == "omega") cfg.omega = range_from_json(v, key);
      else if (key == "Omega") cfg.Omega = range_from_json(v, key);
      else if (key == "eps_prime") cfg.eps_prime = range_from_json(v, key);
      else if (key == "kappa") cfg.kappa = range_from_json(v, key);
      else if (key == "n_atoms") cfg.n_atoms = range_from_json(v, key);
      else if (key == "alpha0") cfg.alpha0 = range_from_json(v, key);
      else if (key == "cutoff_max") cfg.cutoff_max = v.get<int>();
      else if (key == "tol_energy") cfg.tol_energy = v.get<double>();
      else if (key == "tol_tail") cfg.tol_tail = v.get<double>();
      else if (key == "threads") cfg.threads = v.get<int>();
      else if (key == "gaps") cfg.gaps = v.get<int>();
      else if (key == "out") cfg.out = v.get<std::string>();
      else throw ConfigError("unknown config key '" + key + "'");
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError("config key '" + key + "': " + e.what());
    }
  }
}

}  // namespace bdicke_cli
