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

#ifndef BDICKE_EXACT_HPP
#define BDICKE_EXACT_HPP

#include <Eigen/Dense>
#include <vector>

#include "bdicke/error.hpp"
#include "bdicke/linalg.hpp"
#include "bdicke/params.hpp"

namespace bdicke {

/// Ground-state expectation values. Quadratures follow operators.hpp; the
/// (a + a^dag)^2 moments use the untruncated matrix elements, as the
/// Hamiltonian does.
struct Observables {
  double n_photons = 0.0;
  double j_z = 0.0;
  double j_x = 0.0;
  double var_x = 0.0;
  double var_p = 0.0;
  double var_jx = 0.0;  // <J_x^2> - <J_x>^2 in the lab frame
  // Variance of J along the mean spin direction (<J_x>, <J_z>); this is the
  // component the decoupling unitary broadens at order beta^2.
  double var_j_longitudinal = 0.0;
  double entropy = 0.0;  // von Neumann entropy of the spin reduced state, natural log
  double parity = 0.0;   // <Pi>
};

struct ConvergenceOptions {
  double tol_energy = 1e-10;  // in units of omega
  double tol_tail = 1e-10;
  int initial_cutoff = 32;
  int max_cutoff = 4096;
};

struct ConvergenceInfo {
  bool converged = false;
  std::vector<int> cutoffs;              // every cutoff diagonalized, in order
  std::vector<double> ground_energies;   // E_0 at each cutoff
  std::vector<double> tails;             // top-10% Fock population at each cutoff
  double energy_change = 0.0;            // |E_0(final) - E_0(previous)| / omega
  double tail = 0.0;
};

struct SpectrumResult {
  Eigen::VectorXd eigenvalues;  // ascending, (cutoff+1)(N+1) values
  Eigen::VectorXd ground_vector;
  int cutoff = 0;
  int n_atoms = 0;
  ConvergenceInfo convergence;
  Observables observables;
};

class ConvergenceError : public NumericalError {
 public:
  ConvergenceError(const std::string& what, SpectrumResult best)
      : NumericalError(what), best_(std::move(best)) {}
  const SpectrumResult& best() const { return best_; }

 private:
  SpectrumResult best_;
};

// H in the product basis (n outer, spin inner); bandwidth N+2, or 2(N+1)
// with the A^2 term.
SymmetricBandMatrix build_hamiltonian(const ModelParams& params, int cutoff);

// Single truncation; convergence.converged stays false.
SpectrumResult diagonalize(const ModelParams& params, int cutoff);

/// Doubles the cutoff from initial_cutoff until the ground energy changes by
/// less than tol_energy * omega between successive cutoffs and the ground
/// state has less than tol_tail of its weight in the top 10% of Fock levels.
/// Throws ConvergenceError (carrying the best result) past max_cutoff.
SpectrumResult diagonalize_converged(const ModelParams& params,
                                     const ConvergenceOptions& options = {});

// All eigenpairs by a dense solve; for small bases only.
SymmetricEigen diagonalize_dense(const ModelParams& params, int cutoff);

// First k gaps E_i - E_0.
std::vector<double> excitation_spectrum(const SpectrumResult& result, int k);

Observables ground_observables(const Eigen::VectorXd& state, const ModelParams& params,
                               int cutoff);

// Diagonal of Pi = exp{i pi [a^dag a + (J_z + N)/2]}, entries (-1)^(n + mi).
Eigen::VectorXd parity_diagonal(int cutoff, int n_atoms);

// max |[H, Pi]_ij|, i.e. 2 |H_ij| over pairs of opposite parity.
double parity_commutator_norm(const SymmetricBandMatrix& hamiltonian, int cutoff, int n_atoms);

double tail_population(const Eigen::VectorXd& state, int cutoff, int n_atoms);

}  // namespace bdicke

#endif  // BDICKE_EXACT_HPP
