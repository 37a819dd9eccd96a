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

#include "bdicke/params.hpp"

#include <cmath>
#include <string>

#include "bdicke/error.hpp"

namespace bdicke {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidArgument("invalid model parameters: " + what);
}

}  // namespace

ModelParams::ModelParams(double omega, double Omega, double epsilon, double lambda, int n_atoms,
                         double alpha0)
    : omega_(omega),
      Omega_(Omega),
      epsilon_(epsilon),
      lambda_(lambda),
      n_atoms_(n_atoms),
      alpha0_(alpha0) {
  require(std::isfinite(omega) && omega > 0.0, "omega must be finite and > 0");
  require(std::isfinite(Omega) && Omega > 0.0, "Omega must be finite and > 0");
  require(std::isfinite(epsilon), "epsilon must be finite");
  require(std::isfinite(lambda) && lambda >= 0.0, "lambda must be finite and >= 0");
  require(n_atoms >= 1, "n_atoms must be >= 1");
  require(std::isfinite(alpha0) && alpha0 >= 0.0, "alpha0 must be finite and >= 0");
}

ModelParams ModelParams::make(double omega, double Omega, double epsilon, double lambda,
                              int n_atoms, double alpha0) {
  return ModelParams(omega, Omega, epsilon, lambda, n_atoms, alpha0);
}

ModelParams ModelParams::from_rescaled(double omega, double Omega, double kappa,
                                       double eps_prime, int n_atoms, double alpha0) {
  require(std::isfinite(kappa) && kappa >= 0.0, "kappa must be finite and >= 0");
  require(std::isfinite(eps_prime), "eps_prime must be finite");
  require(n_atoms >= 1, "n_atoms must be >= 1");
  require(omega > 0.0 && Omega > 0.0, "omega and Omega must be > 0");
  const double lambda = kappa * std::sqrt(omega * Omega) / (2.0 * std::sqrt(double(n_atoms)));
  return ModelParams(omega, Omega, eps_prime * Omega, lambda, n_atoms, alpha0);
}

double ModelParams::kappa() const {
  return 2.0 * lambda_ * std::sqrt(double(n_atoms_)) / std::sqrt(omega_ * Omega_);
}

double ModelParams::kappa_eff_sq() const {
  const double k2 = kappa() * kappa();
  return k2 / (1.0 + alpha0_ * k2);
}

ModelParams ModelParams::with_epsilon(double epsilon) const {
  return ModelParams(omega_, Omega_, epsilon, lambda_, n_atoms_, alpha0_);
}

ModelParams ModelParams::with_kappa(double kappa) const {
  return from_rescaled(omega_, Omega_, kappa, eps_prime(), n_atoms_, alpha0_);
}

Rescaled rescaled(const ModelParams& params) {
  return Rescaled{params.kappa(), params.eps_prime(), params.kappa0()};
}

}  // namespace bdicke
