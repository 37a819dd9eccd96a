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

#include <bdicke/bdicke.h>

#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <memory>
#include <ostream>
#include <thread>

#include "cli.hpp"
#include "helpers.hpp"
#include "pool.hpp"

namespace bdicke_cli {

namespace {

Table sweep(const RunConfig& cfg, std::vector<std::string> columns,
            const std::function<Rows(const Point&, nlohmann::json&)>& eval) {
  const auto pts = sweep_points(cfg);
  struct Result {
    Rows rows;
    nlohmann::json meta;
  };
  const auto res = parallel_map<Result>(int(pts.size()), worker_count(cfg), [&](int i) {
    Result r;
    r.rows = eval(pts[i], r.meta);
    for (auto& row : r.rows) row = concat(point_values(pts[i]), row);
    return r;
  });
  Table t;
  t.header = kPointColumns;
  t.header.insert(t.header.end(), columns.begin(), columns.end());
  nlohmann::json per_point = nlohmann::json::array();
  for (const auto& r : res) {
    t.rows.insert(t.rows.end(), r.rows.begin(), r.rows.end());
    if (!r.meta.is_null()) per_point.push_back(r.meta);
  }
  if (!per_point.empty()) t.meta["points"] = per_point;
  return t;
}

Table run_meanfield(const RunConfig& cfg) {
  return sweep(cfg, {"root", "n_roots", "theta", "alpha", "energy", "branch", "residual", "lhs_slope"},
               [](const Point& pt, nlohmann::json&) {
                 const Params p(pt);
                 const auto s = roots(p);
                 Rows rows;
                 for (size_t i = 0; i < s.size(); ++i) {
                   rows.push_back({double(i), double(s.size()), s[i].theta, s[i].alpha,
                                   s[i].energy, double(s[i].branch), s[i].residual,
                                   s[i].lhs_slope});
                 }
                 return rows;
               });
}

Table run_co(const RunConfig& cfg) {
  return sweep(cfg,
               {"branch", "theta", "omega_eff_atom", "beta", "gamma", "xi", "omega_prime",
                "near_critical", "var_x", "var_p"},
               [](const Point& pt, nlohmann::json&) {
                 const Params p(pt);
                 Rows rows;
                 for (const auto& s : roots(p)) {
                   if (s.branch == BDICKE_BRANCH_UNSTABLE) continue;
                   bdicke_co_effective e;
                   const bdicke_status st = bdicke_co_compute(p.get(), &s, &e);
                   if (st != BDICKE_OK) {
                     // The high-energy branch may lie beyond its stability limit.
                     if (s.branch == BDICKE_BRANCH_NEGATIVE_GROUND) check(st, "co limit");
                     rows.push_back({double(s.branch), s.theta, kNaN, kNaN, kNaN, kNaN, kNaN,
                                     kNaN, kNaN, kNaN});
                     continue;
                   }
                   double vx = 0, vp = 0;
                   check(bdicke_co_field_variances(&e, pt.omega, &vx, &vp), "variances");
                   rows.push_back({double(s.branch), s.theta, e.omega_eff_atom, e.beta, e.gamma,
                                   e.xi, e.omega_prime, double(e.near_critical), vx, vp});
                 }
                 return rows;
               });
}

Table run_cs(const RunConfig& cfg) {
  return sweep(cfg,
               {"theta", "omega_minus", "omega_plus", "sigma", "var_xa", "var_xb", "var_pa",
                "var_pb"},
               [](const Point& pt, nlohmann::json&) {
                 const Params p(pt);
                 const auto s = ground(p);
                 bdicke_normal_modes m;
                 check(bdicke_cs_normal_modes(p.get(), &s, &m), "cs limit");
                 return Rows{{s.theta, m.omega_minus, m.omega_plus, m.sigma, m.var_xa, m.var_xb,
                              m.var_pa, m.var_pb}};
               });
}

Table run_exact(const RunConfig& cfg) {
  std::vector<std::string> cols{"cutoff", "converged", "ground_energy"};
  for (int i = 1; i <= cfg.gaps; ++i) cols.push_back("gap_" + std::to_string(i));
  for (const char* c : {"n_photons", "j_z", "j_x", "var_x", "var_p", "var_jx",
                        "var_j_longitudinal", "entropy", "parity", "omega_prime_co"}) {
    cols.push_back(c);
  }
  return sweep(cfg, cols, [&cfg](const Point& pt, nlohmann::json& meta) {
    const Params p(pt);
    const auto s = exact(p, cfg);
    meta = convergence_json(s.get());
    bdicke_convergence_info c;
    bdicke_spectrum_convergence(s.get(), &c);
    double e0 = 0;
    size_t n = 0;
    bdicke_spectrum_eigenvalues(s.get(), &e0, 1, &n);
    std::vector<double> row{double(c.cutoff), double(c.converged), e0};
    row = concat(row, gaps(s.get(), cfg.gaps));
    bdicke_observables o;
    bdicke_spectrum_observables(s.get(), &o);
    return Rows{concat(row, {o.n_photons, o.j_z, o.j_x, o.var_x, o.var_p, o.var_jx,
                             o.var_j_longitudinal, o.entropy, o.parity, omega_prime_or_nan(p)})};
  });
}

Table run_scaling(const RunConfig& cfg) {
  if (cfg.omega.count > 1 || cfg.Omega.count > 1 || cfg.n_atoms.count > 1 || cfg.kappa.count > 1 ||
      cfg.alpha0.count > 1) {
    throw ConfigError("scaling sweeps eps-prime only");
  }
  if (cfg.alpha0.start != 0.0) throw ConfigError("scaling is defined without the A^2 term");
  const auto eps = cfg.eps_prime.values();
  const size_t n = eps.size();
  std::vector<double> th(n), tha(n), wp(n), len(n);
  bdicke_scaling_fit fit;
  check(bdicke_scaling_exponents(eps.data(), n, cfg.omega.start, cfg.Omega.start,
                                 int(cfg.n_atoms.start), &fit, th.data(), tha.data(), wp.data(),
                                 len.data()),
        "scaling");
  Table t;
  t.header = {"eps_prime", "theta", "theta_asymptotic", "omega_prime", "length"};
  for (size_t i = 0; i < n; ++i) t.rows.push_back({eps[i], th[i], tha[i], wp[i], len[i]});
  t.meta["kappa"] = 1.0;
  t.meta["exponent_energy"] = fit.exponent_energy;
  t.meta["exponent_length"] = fit.exponent_length;
  return t;
}

}  // namespace

Table run_figure(const RunConfig& cfg);

Table run(const RunConfig& cfg) {
  cfg.validate();
  if (cfg.mode == "meanfield") return run_meanfield(cfg);
  if (cfg.mode == "co") return run_co(cfg);
  if (cfg.mode == "cs") return run_cs(cfg);
  if (cfg.mode == "exact") return run_exact(cfg);
  if (cfg.mode == "scaling") return run_scaling(cfg);
  if (cfg.mode == "figure") return run_figure(cfg);
  throw ConfigError("unknown mode '" + cfg.mode + "'");
}

void write_csv(std::ostream& os, const Table& table) {
  for (size_t i = 0; i < table.header.size(); ++i) os << (i ? "," : "") << table.header[i];
  os << '\n';
  char buf[40];
  for (const auto& row : table.rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      const double v = row[i];
      if (std::isnan(v)) std::snprintf(buf, sizeof buf, "nan");
      else if (std::isinf(v)) std::snprintf(buf, sizeof buf, v > 0 ? "inf" : "-inf");
      else std::snprintf(buf, sizeof buf, "%.17g", v);
      os << (i ? "," : "") << buf;
    }
    os << '\n';
  }
}

nlohmann::json sidecar(const RunConfig& cfg, const Table& table) {
  nlohmann::json j;
  j["library_version"] = bdicke_version();
  j["config"] = cfg.to_json();
  j["columns"] = table.header;
  j["rows"] = table.rows.size();
  for (const auto& [k, v] : table.meta.items()) j[k] = v;
  return j;
}

}  // namespace bdicke_cli
