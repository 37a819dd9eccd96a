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

#ifndef BDICKE_CO_LIMIT_HPP
#define BDICKE_CO_LIMIT_HPP

#include <Eigen/Dense>
#include <span>
#include <vector>

#include "bdicke/meanfield.hpp"
#include "bdicke/params.hpp"

namespace bdicke {

/// Effective single-oscillator description for Omega/omega -> infinity, built
/// on a stable mean-field branch.
///
/// After shifting a -> a + alpha and rotating the spin by theta, the decoupling
/// unitary U(beta, gamma) = exp{i J_y [beta (a+a^dag) + gamma (a+a^dag)^2]}
/// removes the spin-boson coupling to second order in lambda/Omega when
///   beta Omega' + lambda cos(theta) = 0,   gamma Omega' - 2 beta lambda sin(theta) = 0.
/// Projecting onto the lowest spin state leaves
///   omega a^dag a + (N beta lambda cos(theta) + kappa0) (a+a^dag)^2,
/// whose squeezed vacuum has omega' = omega e^{2 xi} with
///   e^{4 xi} = 1 - 4 N lambda^2 cos^2(theta) / (omega Omega') + 4 kappa0 / omega.
struct CoEffective {
  double omega_eff_atom = 0.0;  // Omega' = Omega cos(theta) - eps sin(theta) - 4 alpha lambda sin(theta)
  double beta = 0.0;
  double gamma = 0.0;
  double xi = 0.0;           // -inf exactly at the critical point
  double omega_prime = 0.0;  // excitation energy
  // Set for the high-energy branch close to where it merges with the unstable
  // root (omega'/omega < 0.1); that regime is not a physical spectrum.
  bool near_critical = false;
};

double effective_atom_splitting(const ModelParams& params, const MeanFieldSolution& sol);

// Throws InvalidArgument for an unstable root and NumericalError when the
// squeezing argument is negative (branch beyond its stability limit).
CoEffective co_effective(const ModelParams& params, const MeanFieldSolution& sol);

// Same construction with the A^2 term (requires alpha0 > 0 and a root of the
// modified self-consistency equation).
CoEffective co_effective_with_a2(const ModelParams& params, const MeanFieldSolution& sol);

struct FieldVariances {
  double var_x = 0.0;
  double var_p = 0.0;
};

// (Dx)^2 = e^{-2 xi} / (2 omega), (Dp)^2 = omega e^{2 xi} / 2. The O(beta^2)
// correction to (Dp)^2 is not included.
FieldVariances co_field_variances(const CoEffective& eff, double omega);

// Small-bias root at kappa = 1: theta = -(2 eps')^{1/3}.
double critical_theta_smallbias(double eps_prime);

struct ScalingPoint {
  double eps_prime = 0.0;
  double theta = 0.0;
  double theta_asymptotic = 0.0;
  double omega_prime = 0.0;
  double length = 0.0;  // Delta(a + a^dag) = e^{-xi}
};

struct ScalingFit {
  double exponent_energy = 0.0;  // slope of log omega' vs log eps'
  double exponent_length = 0.0;  // slope of log Delta(a+a^dag) vs log eps'
  std::vector<ScalingPoint> points;
};

/// Critical scaling at kappa = 1. The grid must lie inside (1e-8, 1e-2) and
/// span at least three decades.
ScalingFit scaling_exponents(std::span<const double> eps_grid, double omega, double Omega,
                             int n_atoms);

/// Ground-state ansatz exp(i theta J_y / 2) D(alpha) U(beta, gamma) S(xi) |0>|j,-j>
/// in the truncated product basis (see operators.hpp for ordering), with
/// D(alpha) = exp(alpha (a^dag - a)) and S(xi) = exp(xi (a^2 - a^dag^2) / 2).
/// Fails if more than 1e-8 of the population sits in the top 10% of Fock levels.
Eigen::VectorXcd build_ansatz_state(const ModelParams& params, const MeanFieldSolution& sol,
                                    const CoEffective& eff, int cutoff);

double state_fidelity(const Eigen::VectorXd& reference, const Eigen::VectorXcd& state);

// Leading scale beta^2 of the spin fluctuations generated by U(beta, gamma).
double spin_variance_prediction(const ModelParams& params, const CoEffective& eff);

}  // namespace bdicke

#endif  // BDICKE_CO_LIMIT_HPP
