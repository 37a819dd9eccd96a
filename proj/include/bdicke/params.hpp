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

#ifndef BDICKE_PARAMS_HPP
#define BDICKE_PARAMS_HPP

namespace bdicke {

// Dimensionless combinations of the model parameters.
struct Rescaled {
  double kappa = 0.0;      // 2 lambda sqrt(N) / sqrt(omega Omega)
  double eps_prime = 0.0;  // epsilon / Omega
  double kappa0 = 0.0;     // alpha0 N lambda^2 / Omega, energy units
};

/// Parameters of the biased Dicke Hamiltonian
///
///   H = omega a^dag a + (Omega/2) J_z + (epsilon/2) J_x + lambda J_x (a + a^dag)
///       [+ kappa0 (a + a^dag)^2]
///
/// with J_i = sum_k sigma_i^k (twice the standard spin-N/2 operators) and
/// hbar = 1. Values are validated on construction and immutable afterwards.
class ModelParams {
 public:
  static ModelParams make(double omega, double Omega, double epsilon, double lambda, int n_atoms,
                          double alpha0 = 0.0);

  // Builds parameters from (kappa, eps_prime): lambda = kappa sqrt(omega Omega) / (2 sqrt N),
  // epsilon = eps_prime Omega.
  static ModelParams from_rescaled(double omega, double Omega, double kappa, double eps_prime,
                                   int n_atoms, double alpha0 = 0.0);

  double omega() const { return omega_; }
  double Omega() const { return Omega_; }
  double epsilon() const { return epsilon_; }
  double lambda() const { return lambda_; }
  int n_atoms() const { return n_atoms_; }
  double alpha0() const { return alpha0_; }

  double kappa() const;
  double eps_prime() const { return epsilon_ / Omega_; }
  double kappa0() const { return alpha0_ * n_atoms_ * lambda_ * lambda_ / Omega_; }

  // kappa^2 / (1 + alpha0 kappa^2); equals kappa^2 without the A^2 term.
  double kappa_eff_sq() const;

  ModelParams with_epsilon(double epsilon) const;
  ModelParams with_kappa(double kappa) const;

 private:
  ModelParams(double omega, double Omega, double epsilon, double lambda, int n_atoms,
              double alpha0);

  double omega_;
  double Omega_;
  double epsilon_;
  double lambda_;
  int n_atoms_;
  double alpha0_;
};

Rescaled rescaled(const ModelParams& params);

}  // namespace bdicke

#endif  // BDICKE_PARAMS_HPP
