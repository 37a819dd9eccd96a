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

#ifndef BDICKE_TOOLS_HELPERS_HPP
#define BDICKE_TOOLS_HELPERS_HPP

// Thin RAII and conversion layer over the C API, shared by the CLI modes.

#include <bdicke/bdicke.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <string>
#include <thread>
#include <vector>

#include "cli.hpp"

namespace bdicke_cli {

inline constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

inline void check(bdicke_status s, const std::string& what) {
  if (s == BDICKE_OK) return;
  const std::string msg = what + ": " + bdicke_last_error();
  if (s == BDICKE_INVALID_ARGUMENT) throw ConfigError(msg);
  throw NumericalFailure(msg);
}

struct Point {
  double omega, Omega, eps_prime, kappa;
  int n_atoms;
  double alpha0;
};

inline const std::vector<std::string> kPointColumns{"omega",   "Omega",   "eps_prime",
                                                    "kappa",   "n_atoms", "alpha0"};

inline std::vector<double> point_values(const Point& p) {
  return {p.omega, p.Omega, p.eps_prime, p.kappa, double(p.n_atoms), p.alpha0};
}

class Params {
 public:
  explicit Params(const Point& p) {
    check(bdicke_params_from_rescaled(p.omega, p.Omega, p.kappa, p.eps_prime, p.n_atoms, p.alpha0,
                                      &ptr_),
          "parameters");
  }
  Params(const Params&) = delete;
  Params& operator=(const Params&) = delete;
  ~Params() { bdicke_params_destroy(ptr_); }
  const bdicke_params* get() const { return ptr_; }

 private:
  bdicke_params* ptr_ = nullptr;
};

using Spectrum = std::unique_ptr<bdicke_spectrum, decltype(&bdicke_spectrum_destroy)>;

inline std::vector<bdicke_mf_solution> roots(const Params& p) {
  std::vector<bdicke_mf_solution> s(3);
  size_t n = 0;
  check(bdicke_solve_mean_field(p.get(), s.data(), s.size(), &n), "mean field");
  s.resize(std::min<size_t>(n, 3));
  return s;
}

inline bdicke_mf_solution ground(const Params& p) {
  for (const auto& s : roots(p)) {
    if (s.branch == BDICKE_BRANCH_NEGATIVE_GROUND) return s;
  }
  throw NumericalFailure("mean field: no ground branch");
}

inline bdicke_co_effective co(const Params& p, const bdicke_mf_solution& s) {
  bdicke_co_effective e;
  check(bdicke_co_compute(p.get(), &s, &e), "co limit");
  return e;
}

// Ground-branch omega' or NaN where the effective model does not exist.
inline double omega_prime_or_nan(const Params& p) {
  bdicke_co_effective e;
  const auto s = ground(p);
  return bdicke_co_compute(p.get(), &s, &e) == BDICKE_OK ? e.omega_prime : kNaN;
}

inline Spectrum exact(const Params& p, const RunConfig& cfg) {
  bdicke_convergence_options o;
  bdicke_convergence_options_default(&o);
  o.tol_energy = cfg.tol_energy;
  o.tol_tail = cfg.tol_tail;
  o.max_cutoff = cfg.cutoff_max;
  bdicke_spectrum* raw = nullptr;
  const bdicke_status s = bdicke_diagonalize_converged(p.get(), &o, &raw);
  Spectrum out(raw, &bdicke_spectrum_destroy);
  check(s, "exact diagonalization");
  return out;
}

inline nlohmann::json convergence_json(const bdicke_spectrum* s) {
  bdicke_convergence_info c;
  bdicke_spectrum_convergence(s, &c);
  std::vector<int> cut(c.steps);
  std::vector<double> e0(c.steps);
  bdicke_spectrum_history(s, cut.data(), e0.data(), nullptr);
  return {{"converged", c.converged != 0}, {"cutoff", c.cutoff},     {"cutoff_history", cut},
          {"ground_energies", e0},          {"energy_change", c.energy_change}, {"tail", c.tail}};
}

inline std::vector<double> gaps(const bdicke_spectrum* s, int k) {
  std::vector<double> g(k);
  check(bdicke_spectrum_gaps(s, k, g.data()), "gaps");
  return g;
}

inline std::vector<Point> sweep_points(const RunConfig& cfg) {
  std::vector<Point> pts;
  for (double w : cfg.omega.values())
    for (double W : cfg.Omega.values())
      for (double e : cfg.eps_prime.values())
        for (double k : cfg.kappa.values())
          for (double n : cfg.n_atoms.values())
            for (double a : cfg.alpha0.values()) pts.push_back({w, W, e, k, int(n), a});
  return pts;
}

inline int worker_count(const RunConfig& cfg) {
  if (cfg.threads > 0) return cfg.threads;
  return std::max(1u, std::thread::hardware_concurrency());
}

inline std::vector<double> concat(std::vector<double> a, const std::vector<double>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

using Rows = std::vector<std::vector<double>>;

}  // namespace bdicke_cli

#endif
