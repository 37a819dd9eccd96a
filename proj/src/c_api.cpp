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

#include "bdicke/bdicke.h"

#include <algorithm>
#include <exception>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "bdicke/co_limit.hpp"
#include "bdicke/cs_limit.hpp"
#include "bdicke/exact.hpp"
#include "bdicke/ladder.hpp"
#include "bdicke/meanfield.hpp"
#include "bdicke/params.hpp"

struct bdicke_params {
  bdicke::ModelParams value;
};

struct bdicke_spectrum {
  bdicke::ModelParams params;
  bdicke::SpectrumResult result;
};

namespace {

thread_local std::string last_error;

bdicke_status fail(bdicke_status code, const char* what) {
  last_error = what;
  return code;
}

// Runs `body`, mapping library exceptions onto status codes.
template <class F>
bdicke_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return BDICKE_OK;
  } catch (const bdicke::ConvergenceError& e) {
    return fail(BDICKE_NOT_CONVERGED, e.what());
  } catch (const bdicke::InvalidArgument& e) {
    return fail(BDICKE_INVALID_ARGUMENT, e.what());
  } catch (const bdicke::NumericalError& e) {
    return fail(BDICKE_NUMERICAL, e.what());
  } catch (const std::bad_alloc&) {
    return fail(BDICKE_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(BDICKE_INTERNAL, e.what());
  } catch (...) {
    return fail(BDICKE_INTERNAL, "unknown error");
  }
}

#define BDICKE_REQUIRE(ptr)                                                  \
  do {                                                                       \
    if ((ptr) == nullptr) return fail(BDICKE_INVALID_ARGUMENT, #ptr " is NULL"); \
  } while (0)

bdicke::Branch to_branch(int b) {
  switch (b) {
    case BDICKE_BRANCH_NEGATIVE_GROUND: return bdicke::Branch::NegativeGround;
    case BDICKE_BRANCH_POSITIVE_STABLE: return bdicke::Branch::PositiveStable;
    case BDICKE_BRANCH_UNSTABLE: return bdicke::Branch::Unstable;
  }
  throw bdicke::InvalidArgument("unknown branch code " + std::to_string(b));
}

int from_branch(bdicke::Branch b) {
  switch (b) {
    case bdicke::Branch::NegativeGround: return BDICKE_BRANCH_NEGATIVE_GROUND;
    case bdicke::Branch::PositiveStable: return BDICKE_BRANCH_POSITIVE_STABLE;
    case bdicke::Branch::Unstable: break;
  }
  return BDICKE_BRANCH_UNSTABLE;
}

bdicke::MeanFieldSolution to_cpp(const bdicke_mf_solution& s) {
  bdicke::MeanFieldSolution out;
  out.theta = s.theta;
  out.alpha = s.alpha;
  out.energy = s.energy;
  out.branch = to_branch(s.branch);
  out.residual = s.residual;
  out.lhs_slope = s.lhs_slope;
  return out;
}

bdicke_mf_solution to_c(const bdicke::MeanFieldSolution& s) {
  return {s.theta, s.alpha, s.energy, from_branch(s.branch), s.residual, s.lhs_slope};
}

bdicke::CoEffective to_cpp(const bdicke_co_effective& e) {
  bdicke::CoEffective out;
  out.omega_eff_atom = e.omega_eff_atom;
  out.beta = e.beta;
  out.gamma = e.gamma;
  out.xi = e.xi;
  out.omega_prime = e.omega_prime;
  out.near_critical = e.near_critical != 0;
  return out;
}

bdicke_co_effective to_c(const bdicke::CoEffective& e) {
  return {e.omega_eff_atom, e.beta, e.gamma, e.xi, e.omega_prime, e.near_critical ? 1 : 0};
}

}  // namespace

extern "C" {

const char* bdicke_version(void) { return BDICKE_VERSION_STRING; }

const char* bdicke_last_error(void) { return last_error.c_str(); }

bdicke_status bdicke_params_create(double omega, double Omega, double epsilon, double lambda,
                                   int n_atoms, double alpha0, bdicke_params** out) {
  BDICKE_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    *out = new bdicke_params{bdicke::ModelParams::make(omega, Omega, epsilon, lambda, n_atoms,
                                                       alpha0)};
  });
}

bdicke_status bdicke_params_from_rescaled(double omega, double Omega, double kappa,
                                          double eps_prime, int n_atoms, double alpha0,
                                          bdicke_params** out) {
  BDICKE_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    *out = new bdicke_params{
        bdicke::ModelParams::from_rescaled(omega, Omega, kappa, eps_prime, n_atoms, alpha0)};
  });
}

void bdicke_params_destroy(bdicke_params* params) { delete params; }

bdicke_status bdicke_params_get(const bdicke_params* params, bdicke_param_values* out) {
  BDICKE_REQUIRE(params);
  BDICKE_REQUIRE(out);
  return guarded([&] {
    const auto& p = params->value;
    *out = {p.omega(), p.Omega(), p.epsilon(), p.lambda(), p.n_atoms(), p.alpha0(),
            p.kappa(), p.eps_prime(), p.kappa0(), p.kappa_eff_sq()};
  });
}

bdicke_status bdicke_selfconsistency_lhs(const bdicke_params* params, double theta, double* out) {
  BDICKE_REQUIRE(params);
  BDICKE_REQUIRE(out);
  return guarded([&] { *out = bdicke::selfconsistency_lhs(params->value, theta); });
}

bdicke_status bdicke_energy_functional(const bdicke_params* params, double alpha, double theta,
                                       double* out) {
  BDICKE_REQUIRE(params);
  BDICKE_REQUIRE(out);
  return guarded([&] { *out = bdicke::energy_functional(params->value, alpha, theta); });
}

bdicke_status bdicke_solve_mean_field(const bdicke_params* params, bdicke_mf_solution* out,
                                      size_t capacity, size_t* count) {
  BDICKE_REQUIRE(params);
  BDICKE_REQUIRE(count);
  if (capacity > 0) BDICKE_REQUIRE(out);
  return guarded([&] {
    const auto sols = bdicke::solve_mean_field(params->value);
    *count = sols.size();
    for (size_t i = 0; i < std::min(capacity, sols.size()); ++i) out[i] = to_c(sols[i]);
  });
}

bdicke_status bdicke_three_root_threshold(const bdicke_params* params, double* out) {
  BDICKE_REQUIRE(params);
  BDICKE_REQUIRE(out);
  return guarded([&] { *out = bdicke::three_root_threshold(params->value); });
}

bdicke_status bdicke_co_compute(const bdicke_params* params, const bdicke_mf_solution* sol,
                                  bdicke_co_effective* out) {
  BDICKE_REQUIRE(params);
  BDICKE_REQUIRE(sol);
  BDICKE_REQUIRE(out);
  return guarded([&] { *out = to_c(bdicke::co_effective(params->value, to_cpp(*sol))); });
}

bdicke_status bdicke_co_field_variances(const bdicke_co_effective* eff, double omega,
                                        double* var_x, double* var_p) {
  BDICKE_REQUIRE(eff);
  BDICKE_REQUIRE(var_x);
  BDICKE_REQUIRE(var_p);
  return guarded([&] {
    const auto v = bdicke::co_field_variances(to_cpp(*eff), omega);
    *var_x = v.var_x;
    *var_p = v.var_p;
  });
}

bdicke_status bdicke_critical_theta_smallbias(double eps_prime, double* out) {
  BDICKE_REQUIRE(out);
  return guarded([&] { *out = bdicke::critical_theta_smallbias(eps_prime); });
}

bdicke_status bdicke_scaling_exponents(const double* eps_grid, size_t n, double omega,
                                       double Omega, int n_atoms, bdicke_scaling_fit* out,
                                       double* theta, double* theta_asymptotic,
                                       double* omega_prime, double* length) {
  BDICKE_REQUIRE(eps_grid);
  BDICKE_REQUIRE(out);
  return guarded([&] {
    const auto fit = bdicke::scaling_exponents({eps_grid, n}, omega, Omega, n_atoms);
    *out = {fit.exponent_energy, fit.exponent_length};
    for (size_t i = 0; i < n; ++i) {
      const auto& p = fit.points[i];
      if (theta) theta[i] = p.theta;
      if (theta_asymptotic) theta_asymptotic[i] = p.theta_asymptotic;
      if (omega_prime) omega_prime[i] = p.omega_prime;
      if (length) length[i] = p.length;
    }
  });
}

bdicke_status bdicke_ansatz_fidelity(const bdicke_spectrum* spectrum, const bdicke_mf_solution* sol,
                                     const bdicke_co_effective* eff, double* out) {
  BDICKE_REQUIRE(spectrum);
  BDICKE_REQUIRE(sol);
  BDICKE_REQUIRE(eff);
  BDICKE_REQUIRE(out);
  return guarded([&] {
    const auto psi = bdicke::build_ansatz_state(spectrum->params, to_cpp(*sol), to_cpp(*eff),
                                                spectrum->result.cutoff);
    *out = bdicke::state_fidelity(spectrum->result.ground_vector, psi);
  });
}

bdicke_status bdicke_spin_variance_prediction(const bdicke_params* params,
                                              const bdicke_co_effective* eff, double* out) {
  BDICKE_REQUIRE(params);
  BDICKE_REQUIRE(eff);
  BDICKE_REQUIRE(out);
  return guarded([&] { *out = bdicke::spin_variance_prediction(params->value, to_cpp(*eff)); });
}

bdicke_status bdicke_cs_normal_modes(const bdicke_params* params, const bdicke_mf_solution* sol,
                                     bdicke_normal_modes* out) {
  BDICKE_REQUIRE(params);
  BDICKE_REQUIRE(sol);
  BDICKE_REQUIRE(out);
  return guarded([&] {
    const auto m = bdicke::cs_normal_modes(params->value, to_cpp(*sol));
    *out = {m.omega_minus,      m.omega_plus,       m.sigma,           m.variances.var_xa,
            m.variances.var_xb, m.variances.var_pa, m.variances.var_pb};
  });
}

void bdicke_convergence_options_default(bdicke_convergence_options* out) {
  if (out == nullptr) return;
  const bdicke::ConvergenceOptions d;
  *out = {d.tol_energy, d.tol_tail, d.initial_cutoff, d.max_cutoff};
}

bdicke_status bdicke_diagonalize(const bdicke_params* params, int cutoff, bdicke_spectrum** out) {
  BDICKE_REQUIRE(params);
  BDICKE_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    *out = new bdicke_spectrum{params->value, bdicke::diagonalize(params->value, cutoff)};
  });
}

bdicke_status bdicke_diagonalize_converged(const bdicke_params* params,
                                           const bdicke_convergence_options* options,
                                           bdicke_spectrum** out) {
  BDICKE_REQUIRE(params);
  BDICKE_REQUIRE(out);
  *out = nullptr;
  bdicke::ConvergenceOptions opts;
  if (options != nullptr) {
    opts = {options->tol_energy, options->tol_tail, options->initial_cutoff, options->max_cutoff};
  }
  return guarded([&] {
    try {
      *out = new bdicke_spectrum{params->value, bdicke::diagonalize_converged(params->value, opts)};
    } catch (const bdicke::ConvergenceError& e) {
      *out = new bdicke_spectrum{params->value, e.best()};
      throw;
    }
  });
}

void bdicke_spectrum_destroy(bdicke_spectrum* spectrum) { delete spectrum; }

size_t bdicke_spectrum_size(const bdicke_spectrum* spectrum) {
  return spectrum ? size_t(spectrum->result.eigenvalues.size()) : 0;
}

bdicke_status bdicke_spectrum_eigenvalues(const bdicke_spectrum* spectrum, double* out,
                                          size_t capacity, size_t* count) {
  BDICKE_REQUIRE(spectrum);
  BDICKE_REQUIRE(count);
  if (capacity > 0) BDICKE_REQUIRE(out);
  const auto& ev = spectrum->result.eigenvalues;
  *count = size_t(ev.size());
  std::copy_n(ev.data(), std::min(capacity, *count), out);
  return BDICKE_OK;
}

bdicke_status bdicke_spectrum_gaps(const bdicke_spectrum* spectrum, int k, double* out) {
  BDICKE_REQUIRE(spectrum);
  if (k > 0) BDICKE_REQUIRE(out);
  return guarded([&] {
    const auto gaps = bdicke::excitation_spectrum(spectrum->result, k);
    std::copy(gaps.begin(), gaps.end(), out);
  });
}

bdicke_status bdicke_spectrum_ground_vector(const bdicke_spectrum* spectrum, double* out,
                                            size_t capacity, size_t* count) {
  BDICKE_REQUIRE(spectrum);
  BDICKE_REQUIRE(count);
  if (capacity > 0) BDICKE_REQUIRE(out);
  const auto& v = spectrum->result.ground_vector;
  *count = size_t(v.size());
  std::copy_n(v.data(), std::min(capacity, *count), out);
  return BDICKE_OK;
}

bdicke_status bdicke_spectrum_observables(const bdicke_spectrum* spectrum,
                                          bdicke_observables* out) {
  BDICKE_REQUIRE(spectrum);
  BDICKE_REQUIRE(out);
  const auto& o = spectrum->result.observables;
  *out = {o.n_photons, o.j_z,     o.j_x,     o.var_x,  o.var_p,
          o.var_jx,    o.var_j_longitudinal, o.entropy, o.parity};
  return BDICKE_OK;
}

bdicke_status bdicke_spectrum_convergence(const bdicke_spectrum* spectrum,
                                          bdicke_convergence_info* out) {
  BDICKE_REQUIRE(spectrum);
  BDICKE_REQUIRE(out);
  const auto& c = spectrum->result.convergence;
  *out = {c.converged ? 1 : 0, spectrum->result.cutoff, int(c.cutoffs.size()), c.energy_change,
          c.tail};
  return BDICKE_OK;
}

bdicke_status bdicke_spectrum_history(const bdicke_spectrum* spectrum, int* cutoffs,
                                      double* ground_energies, double* tails) {
  BDICKE_REQUIRE(spectrum);
  const auto& c = spectrum->result.convergence;
  if (cutoffs) std::copy(c.cutoffs.begin(), c.cutoffs.end(), cutoffs);
  if (ground_energies) std::copy(c.ground_energies.begin(), c.ground_energies.end(), ground_energies);
  if (tails) std::copy(c.tails.begin(), c.tails.end(), tails);
  return BDICKE_OK;
}

bdicke_status bdicke_parity_commutator_norm(const bdicke_params* params, int cutoff, double* out) {
  BDICKE_REQUIRE(params);
  BDICKE_REQUIRE(out);
  return guarded([&] {
    const auto h = bdicke::build_hamiltonian(params->value, cutoff);
    *out = bdicke::parity_commutator_norm(h, cutoff, params->value.n_atoms());
  });
}

bdicke_status bdicke_decompose_ladders(const double* gaps, size_t n, double tolerance,
                                       bdicke_ladder_fit* out) {
  BDICKE_REQUIRE(gaps);
  BDICKE_REQUIRE(out);
  return guarded([&] {
    const auto fit = bdicke::decompose_ladders({gaps, n}, tolerance);
    bdicke_ladder_fit r{};
    r.n_ladders = int(fit.ladders.size());
    for (int i = 0; i < r.n_ladders; ++i) {
      r.start[i] = fit.ladders[i].start;
      r.spacing[i] = fit.ladders[i].spacing;
      r.spread[i] = fit.ladders[i].spread;
      r.count[i] = int(fit.ladders[i].members.size());
    }
    r.unassigned = fit.unassigned;
    r.offset = fit.offset;
    *out = r;
  });
}

}  // extern "C"
