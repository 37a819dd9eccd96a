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

// Named presets that regenerate every figure's data in one call. Parameters
// that the figures do not fix are listed under "chosen_defaults" in the
// sidecar.

#include <bdicke/bdicke.h>

#include <cmath>
#include <sstream>

#include "cli.hpp"
#include "helpers.hpp"
#include "pool.hpp"

namespace bdicke_cli {

namespace {

std::vector<double> linspace(double a, double b, int n) {
  return Range{a, b, n, false}.values();
}

std::string label(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

nlohmann::json preset(const std::string& name, nlohmann::json fixed,
                      std::vector<std::string> defaults) {
  return {{"name", name}, {"fixed", std::move(fixed)}, {"chosen_defaults", std::move(defaults)}};
}

// Left-hand side of the self-consistency condition for several couplings.
Table fig1() {
  const std::vector<double> kappas{0.8, 1.1, 1.5};
  const double eps = 0.11;
  Table t;
  t.header = {"theta"};
  for (double k : kappas) t.header.push_back("lhs_kappa_" + label(k));
  t.header.push_back("rhs");
  std::vector<std::unique_ptr<Params>> ps;
  nlohmann::json rts = nlohmann::json::object();
  for (double k : kappas) {
    ps.push_back(std::make_unique<Params>(Point{1, 1, eps, k, 1, 0}));
    std::vector<double> th;
    for (const auto& s : roots(*ps.back())) th.push_back(s.theta);
    rts[label(k)] = th;
  }
  for (double th : linspace(-M_PI / 2 + 0.05, M_PI / 2 - 0.05, 1001)) {
    std::vector<double> row{th};
    for (const auto& p : ps) {
      double v = 0;
      check(bdicke_selfconsistency_lhs(p->get(), th, &v), "lhs");
      row.push_back(v);
    }
    row.push_back(eps);
    t.rows.push_back(row);
  }
  t.meta["roots"] = rts;
  t.meta["preset"] = preset("fig1", {{"omega", 1}, {"Omega", 1}, {"n_atoms", 1}},
                            {"kappa in {0.8, 1.1, 1.5}", "eps_prime = 0.11",
                             "theta grid -pi/2+0.05 : pi/2-0.05 : 1001"});
  return t;
}

// Exact gaps along a kappa grid; one Point per row.
struct GapRow {
  std::vector<double> gaps;
  int cutoff = 0;
  double omega_prime = kNaN;
  double entropy = kNaN;
  nlohmann::json convergence;
};

std::vector<GapRow> exact_rows(const RunConfig& cfg, const std::vector<Point>& pts, int k) {
  return parallel_map<GapRow>(int(pts.size()), worker_count(cfg), [&](int i) {
    const Params p(pts[i]);
    const auto s = exact(p, cfg);
    GapRow r;
    r.gaps = gaps(s.get(), k);
    bdicke_convergence_info c;
    bdicke_spectrum_convergence(s.get(), &c);
    r.cutoff = c.cutoff;
    bdicke_observables o;
    bdicke_spectrum_observables(s.get(), &o);
    r.entropy = o.entropy;
    r.omega_prime = omega_prime_or_nan(p);
    r.convergence = convergence_json(s.get());
    return r;
  });
}

Table fig2(const RunConfig& cfg) {
  const auto ks = linspace(0, 2, 41);
  std::vector<Point> pts;
  for (double k : ks) pts.push_back({1, 60, 0.11, k, 5, 0});
  const auto rows = exact_rows(cfg, pts, 30);
  Table t;
  t.header = {"kappa", "cutoff", "omega_prime_co"};
  for (int i = 1; i <= 30; ++i) t.header.push_back("gap_" + std::to_string(i));
  nlohmann::json conv = nlohmann::json::array();
  for (size_t i = 0; i < ks.size(); ++i) {
    t.rows.push_back(concat({ks[i], double(rows[i].cutoff), rows[i].omega_prime}, rows[i].gaps));
    conv.push_back(rows[i].convergence);
  }
  t.meta["convergence"] = conv;
  t.meta["preset"] = preset("fig2", {{"omega", 1}, {"Omega", 60}, {"eps_prime", 0.11}, {"n_atoms", 5}},
                            {"kappa grid 0:2:41"});
  return t;
}

Table fig3(const RunConfig& cfg) {
  const auto ks = linspace(0, 2, 41);
  const std::vector<double> ratios{20, 60, 180};
  std::vector<Point> pts;
  for (double r : ratios)
    for (double k : ks) pts.push_back({1, r, 0.11, k, 5, 0});
  const auto rows = exact_rows(cfg, pts, 1);
  Table t;
  t.header = {"kappa", "omega_prime_co"};
  for (double r : ratios) t.header.push_back("gap_ratio_" + label(r));
  nlohmann::json conv = nlohmann::json::array();
  for (size_t i = 0; i < ks.size(); ++i) {
    std::vector<double> row{ks[i], rows[i].omega_prime};
    for (size_t j = 0; j < ratios.size(); ++j) {
      const auto& r = rows[j * ks.size() + i];
      row.push_back(r.gaps[0]);
      conv.push_back(r.convergence);
    }
    t.rows.push_back(row);
  }
  t.meta["convergence"] = conv;
  t.meta["preset"] = preset("fig3", {{"omega", 1}, {"eps_prime", 0.11}, {"n_atoms", 5}},
                            {"Omega/omega in {20, 60, 180}", "kappa grid 0:2:41"});
  return t;
}

Table fig4() {
  Table t;
  t.header = {"kappa", "eps_prime", "omega_prime_over_omega"};
  for (double e : linspace(0, 0.3, 61)) {
    for (double k : linspace(0, 2, 201)) {
      const Params p(Point{1, 1, e, k, 1, 0});
      t.rows.push_back({k, e, omega_prime_or_nan(p)});
    }
  }
  t.meta["preset"] = preset("fig4", {{"kappa", "0:2:201"}, {"eps_prime", "0:0.3:61"}},
                            {"omega = Omega = 1, n_atoms = 1 (omega'/omega depends on kappa, eps' only)"});
  return t;
}

Table fig5(const RunConfig& cfg) {
  const auto ks = linspace(0, 2, 41);
  const std::vector<double> biases{0, 0.01, 0.05, 0.11};
  const std::vector<double> ratios{20, 60, 200};
  const double eps_entropy = 0.1;
  std::vector<Point> pts;
  for (double r : ratios)
    for (double k : ks) pts.push_back({1, r, eps_entropy, k, 5, 0});
  const auto rows = exact_rows(cfg, pts, 1);
  Table t;
  t.header = {"kappa"};
  for (double e : biases) t.header.push_back("xi_eps_" + label(e));
  for (double r : ratios) t.header.push_back("entropy_ratio_" + label(r));
  nlohmann::json conv = nlohmann::json::array();
  for (size_t i = 0; i < ks.size(); ++i) {
    std::vector<double> row{ks[i]};
    for (double e : biases) {
      const Params p(Point{1, 1, e, ks[i], 5, 0});
      bdicke_co_effective c;
      const auto s = ground(p);
      row.push_back(bdicke_co_compute(p.get(), &s, &c) == BDICKE_OK ? c.xi : kNaN);
    }
    for (size_t j = 0; j < ratios.size(); ++j) {
      const auto& r = rows[j * ks.size() + i];
      row.push_back(r.entropy);
      conv.push_back(r.convergence);
    }
    t.rows.push_back(row);
  }
  t.meta["convergence"] = conv;
  t.meta["preset"] = preset("fig5", {{"n_atoms", 5}},
                            {"xi: eps_prime in {0, 0.01, 0.05, 0.11}", "entropy: eps_prime = 0.1",
                             "entropy: Omega/omega in {20, 60, 200}", "kappa grid 0:2:41"});
  return t;
}

Table fig6() {
  const std::vector<double> biases{0, 0.1, 0.2};
  const char* names[] = {"var_xa", "var_xb", "var_pa", "var_pb"};
  Table t;
  t.header = {"kappa"};
  for (const char* n : names)
    for (double e : biases) t.header.push_back(std::string(n) + "_eps_" + label(e));
  for (double k : linspace(0, 3, 301)) {
    std::vector<double> v[4];
    for (double e : biases) {
      const Params p(Point{1, 1, e, k, 1, 0});
      const auto s = ground(p);
      bdicke_normal_modes m;
      const bool ok = bdicke_cs_normal_modes(p.get(), &s, &m) == BDICKE_OK;
      v[0].push_back(ok ? m.var_xa : kNaN);
      v[1].push_back(ok ? m.var_xb : kNaN);
      v[2].push_back(ok ? m.var_pa : kNaN);
      v[3].push_back(ok ? m.var_pb : kNaN);
    }
    std::vector<double> row{k};
    for (auto& x : v) row = concat(row, x);
    t.rows.push_back(row);
  }
  t.meta["preset"] = preset("fig6", {{"omega", 1}, {"Omega", 1}},
                            {"eps_prime in {0, 0.1, 0.2}", "kappa grid 0:3:301",
                             "12 columns: 4 variances x 3 biases"});
  return t;
}

}  // namespace

Table run_figure(const RunConfig& cfg) {
  if (cfg.figure == "fig1") return fig1();
  if (cfg.figure == "fig2") return fig2(cfg);
  if (cfg.figure == "fig3") return fig3(cfg);
  if (cfg.figure == "fig4") return fig4();
  if (cfg.figure == "fig5") return fig5(cfg);
  if (cfg.figure == "fig6") return fig6();
  throw ConfigError("unknown figure '" + cfg.figure + "' (expected fig1..fig6)");
}

}  // namespace bdicke_cli
