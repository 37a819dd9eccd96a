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

/* C interface to the biased Dicke model library.
 *
 * Every call returns a bdicke_status; on failure bdicke_last_error() gives a
 * message for the calling thread. Handles are opaque and owned by the caller.
 */
#ifndef BDICKE_BDICKE_H
#define BDICKE_BDICKE_H

#include <stddef.h>

#if defined(BDICKE_BUILDING_LIBRARY)
#define BDICKE_API __attribute__((visibility("default")))
#else
#define BDICKE_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  BDICKE_OK = 0,
  BDICKE_INVALID_ARGUMENT = 1,
  BDICKE_NUMERICAL = 2,
  BDICKE_NOT_CONVERGED = 3,
  BDICKE_INTERNAL = 4
} bdicke_status;

typedef enum {
  BDICKE_BRANCH_NEGATIVE_GROUND = 0,
  BDICKE_BRANCH_POSITIVE_STABLE = 1,
  BDICKE_BRANCH_UNSTABLE = 2
} bdicke_branch;

typedef struct bdicke_params bdicke_params;
typedef struct bdicke_spectrum bdicke_spectrum;

typedef struct {
  double omega, Omega, epsilon, lambda;
  int n_atoms;
  double alpha0;
  double kappa, eps_prime, kappa0, kappa_eff_sq;
} bdicke_param_values;

typedef struct {
  double theta, alpha, energy;
  int branch; /* bdicke_branch */
  double residual, lhs_slope;
} bdicke_mf_solution;

typedef struct {
  double omega_eff_atom, beta, gamma, xi, omega_prime;
  int near_critical;
} bdicke_co_effective;

typedef struct {
  double exponent_energy, exponent_length;
} bdicke_scaling_fit;

typedef struct {
  double omega_minus, omega_plus, sigma;
  double var_xa, var_xb, var_pa, var_pb;
} bdicke_normal_modes;

typedef struct {
  double tol_energy, tol_tail;
  int initial_cutoff, max_cutoff;
} bdicke_convergence_options;

typedef struct {
  int converged;
  int cutoff;
  int steps; /* number of cutoffs diagonalized */
  double energy_change, tail;
} bdicke_convergence_info;

typedef struct {
  double n_photons, j_z, j_x, var_x, var_p, var_jx, var_j_longitudinal, entropy, parity;
} bdicke_observables;

typedef struct {
  int n_ladders;
  double start[2], spacing[2], spread[2];
  int count[2];
  int unassigned;
  double offset;
} bdicke_ladder_fit;

BDICKE_API const char* bdicke_version(void);
BDICKE_API const char* bdicke_last_error(void);

/* parameters */
BDICKE_API bdicke_status bdicke_params_create(double omega, double Omega, double epsilon,
                                              double lambda, int n_atoms, double alpha0,
                                              bdicke_params** out);
BDICKE_API bdicke_status bdicke_params_from_rescaled(double omega, double Omega, double kappa,
                                                     double eps_prime, int n_atoms, double alpha0,
                                                     bdicke_params** out);
BDICKE_API void bdicke_params_destroy(bdicke_params* params);
BDICKE_API bdicke_status bdicke_params_get(const bdicke_params* params, bdicke_param_values* out);

/* mean field */
BDICKE_API bdicke_status bdicke_selfconsistency_lhs(const bdicke_params* params, double theta,
                                                    double* out);
BDICKE_API bdicke_status bdicke_energy_functional(const bdicke_params* params, double alpha,
                                                  double theta, double* out);
/* Writes up to `capacity` solutions (3 always suffices); *count gets the total. */
BDICKE_API bdicke_status bdicke_solve_mean_field(const bdicke_params* params,
                                                 bdicke_mf_solution* out, size_t capacity,
                                                 size_t* count);
BDICKE_API bdicke_status bdicke_three_root_threshold(const bdicke_params* params, double* out);

/* oscillator limit */
BDICKE_API bdicke_status bdicke_co_compute(const bdicke_params* params,
                                             const bdicke_mf_solution* sol,
                                             bdicke_co_effective* out);
BDICKE_API bdicke_status bdicke_co_field_variances(const bdicke_co_effective* eff, double omega,
                                                   double* var_x, double* var_p);
BDICKE_API bdicke_status bdicke_critical_theta_smallbias(double eps_prime, double* out);
/* The per-point arrays may be NULL; otherwise they hold n values. */
BDICKE_API bdicke_status bdicke_scaling_exponents(const double* eps_grid, size_t n, double omega,
                                                  double Omega, int n_atoms,
                                                  bdicke_scaling_fit* out, double* theta,
                                                  double* theta_asymptotic, double* omega_prime,
                                                  double* length);
/* |<ground|ansatz>|^2 at the spectrum's cutoff. */
BDICKE_API bdicke_status bdicke_ansatz_fidelity(const bdicke_spectrum* spectrum,
                                                const bdicke_mf_solution* sol,
                                                const bdicke_co_effective* eff, double* out);
BDICKE_API bdicke_status bdicke_spin_variance_prediction(const bdicke_params* params,
                                                         const bdicke_co_effective* eff,
                                                         double* out);

/* spin limit */
BDICKE_API bdicke_status bdicke_cs_normal_modes(const bdicke_params* params,
                                                const bdicke_mf_solution* sol,
                                                bdicke_normal_modes* out);

/* exact diagonalization */
BDICKE_API void bdicke_convergence_options_default(bdicke_convergence_options* out);
BDICKE_API bdicke_status bdicke_diagonalize(const bdicke_params* params, int cutoff,
                                            bdicke_spectrum** out);
/* On BDICKE_NOT_CONVERGED *out still receives the best result. */
BDICKE_API bdicke_status bdicke_diagonalize_converged(const bdicke_params* params,
                                                      const bdicke_convergence_options* options,
                                                      bdicke_spectrum** out);
BDICKE_API void bdicke_spectrum_destroy(bdicke_spectrum* spectrum);
BDICKE_API size_t bdicke_spectrum_size(const bdicke_spectrum* spectrum);
BDICKE_API bdicke_status bdicke_spectrum_eigenvalues(const bdicke_spectrum* spectrum, double* out,
                                                     size_t capacity, size_t* count);
BDICKE_API bdicke_status bdicke_spectrum_gaps(const bdicke_spectrum* spectrum, int k, double* out);
BDICKE_API bdicke_status bdicke_spectrum_ground_vector(const bdicke_spectrum* spectrum,
                                                       double* out, size_t capacity,
                                                       size_t* count);
BDICKE_API bdicke_status bdicke_spectrum_observables(const bdicke_spectrum* spectrum,
                                                     bdicke_observables* out);
BDICKE_API bdicke_status bdicke_spectrum_convergence(const bdicke_spectrum* spectrum,
                                                     bdicke_convergence_info* out);
/* History arrays of length info.steps; either may be NULL. */
BDICKE_API bdicke_status bdicke_spectrum_history(const bdicke_spectrum* spectrum, int* cutoffs,
                                                 double* ground_energies, double* tails);
BDICKE_API bdicke_status bdicke_parity_commutator_norm(const bdicke_params* params, int cutoff,
                                                       double* out);

BDICKE_API bdicke_status bdicke_decompose_ladders(const double* gaps, size_t n, double tolerance,
                                                  bdicke_ladder_fit* out);

#ifdef __cplusplus
}
#endif

#endif /* BDICKE_BDICKE_H */
