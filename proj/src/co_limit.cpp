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

#include "bdicke/co_limit.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <string>

#include "bdicke/error.hpp"
#include "bdicke/linalg.hpp"
#include "bdicke/operators.hpp"

namespace bdicke {

namespace {

using cd = std::complex<double>;
constexpr cd kI{0.0, 1.0};
constexpr double kAnsatzTailLimit = 1e-8;

double slope(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = double(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace

double effective_atom_splitting(const ModelParams& params, const MeanFieldSolution& sol) {
  const double s = std::sin(sol.theta);
  return params.Omega() * std::cos(sol.theta) - params.epsilon() * s -
         4.0 * sol.alpha * params.lambda() * s;
}

CoEffective co_effective(const ModelParams& params, const MeanFieldSolution& sol) {
  if (sol.branch == Branch::Unstable) {
    throw InvalidArgument("co_effective: the unstable stationary point has no effective model");
  }
  const double omega = params.omega();
  const double lambda = params.lambda();
  const double c = std::cos(sol.theta);

  CoEffective eff;
  eff.omega_eff_atom = effective_atom_splitting(params, sol);
  if (!(eff.omega_eff_atom > 0.0)) {
    throw NumericalError("co_effective: Omega' <= 0 on branch " +
                         std::string(to_string(sol.branch)));
  }
  const double coupling =
      4.0 * params.n_atoms() * lambda * lambda * c * c / (omega * eff.omega_eff_atom);
  double arg = 1.0 - coupling + 4.0 * params.kappa0() / omega;
  if (arg < 0.0) {
    // Round-off exactly at the critical point, where the argument vanishes.
    const double roundoff = 8.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, coupling);
    if (arg < -roundoff) {
      throw NumericalError("co_effective: 1 - 4 N lambda^2 cos^2(theta)/(omega Omega') = " +
                           std::to_string(arg) + " <= 0 on branch " +
                           std::string(to_string(sol.branch)) + " (theta=" +
                           std::to_string(sol.theta) + ")");
    }
    arg = 0.0;
  }
  eff.xi = 0.25 * std::log(arg);
  eff.omega_prime = omega * std::sqrt(arg);
  eff.beta = -lambda * c / eff.omega_eff_atom;
  eff.gamma = 2.0 * eff.beta * lambda * std::sin(sol.theta) / eff.omega_eff_atom;
  eff.near_critical = sol.branch == Branch::PositiveStable && eff.omega_prime < 0.1 * omega;
  return eff;
}

CoEffective co_effective_with_a2(const ModelParams& params, const MeanFieldSolution& sol) {
  if (!(params.alpha0() > 0.0)) {
    throw InvalidArgument("co_effective_with_a2: requires alpha0 > 0");
  }
  return co_effective(params, sol);
}

FieldVariances co_field_variances(const CoEffective& eff, double omega) {
  if (!(omega > 0.0)) throw InvalidArgument("co_field_variances: omega must be > 0");
  return {std::exp(-2.0 * eff.xi) / (2.0 * omega), 0.5 * omega * std::exp(2.0 * eff.xi)};
}

double critical_theta_smallbias(double eps_prime) {
  if (!(eps_prime > 0.0)) throw InvalidArgument("critical_theta_smallbias: requires eps' > 0");
  return -std::cbrt(2.0 * eps_prime);
}

ScalingFit scaling_exponents(std::span<const double> eps_grid, double omega, double Omega,
                             int n_atoms) {
  if (eps_grid.size() < 3) throw InvalidArgument("scaling_exponents: need at least 3 points");
  double lo = eps_grid.front();
  double hi = eps_grid.front();
  for (double e : eps_grid) {
    if (!(e > 1e-8 && e < 1e-2)) {
      throw InvalidArgument("scaling_exponents: eps' values must lie in (1e-8, 1e-2)");
    }
    lo = std::min(lo, e);
    hi = std::max(hi, e);
  }
  if (std::log10(hi / lo) < 3.0) {
    throw InvalidArgument("scaling_exponents: grid too narrow (needs >= 3 decades)");
  }

  ScalingFit fit;
  std::vector<double> le, lw, ll;
  for (double e : eps_grid) {
    const ModelParams p = ModelParams::from_rescaled(omega, Omega, 1.0, e, n_atoms);
    const MeanFieldSolution sol = ground_solution(p);
    const CoEffective eff = co_effective(p, sol);
    ScalingPoint pt{e, sol.theta, critical_theta_smallbias(e), eff.omega_prime,
                    std::exp(-eff.xi)};
    le.push_back(std::log(e));
    lw.push_back(std::log(pt.omega_prime));
    ll.push_back(std::log(pt.length));
    fit.points.push_back(pt);
  }
  fit.exponent_energy = slope(le, lw);
  fit.exponent_length = slope(le, ll);
  return fit;
}

Eigen::VectorXcd build_ansatz_state(const ModelParams& params, const MeanFieldSolution& sol,
                                    const CoEffective& eff, int cutoff) {
  if (cutoff < 1) throw InvalidArgument("build_ansatz_state: cutoff must be >= 1");
  if (sol.branch == Branch::Unstable) {
    throw InvalidArgument("build_ansatz_state: requires a stable branch");
  }
  if (!std::isfinite(eff.xi)) {
    throw NumericalError("build_ansatz_state: squeezing diverges at the critical point");
  }
  const int n_atoms = params.n_atoms();
  const Index nb = cutoff + 1;
  const Index ns = n_atoms + 1;

  const Eigen::MatrixXcd a = ops::annihilation(cutoff).cast<cd>();
  const Eigen::MatrixXcd ad = a.adjoint();

  // alpha (a^dag - a) = i alpha G  with  G = -i (a^dag - a).
  const Eigen::MatrixXcd displacement = expm_i_hermitian(-kI * (ad - a), sol.alpha);
  // (xi/2)(a^2 - a^dag^2) = i xi G  with  G = -(i/2)(a^2 - a^dag^2).
  const Eigen::MatrixXcd squeeze = expm_i_hermitian(-0.5 * kI * (a * a - ad * ad), eff.xi);
  const Eigen::MatrixXcd jy = ops::spin_jy(n_atoms);
  const Eigen::MatrixXcd rotation = expm_i_hermitian(jy, 0.5 * sol.theta);

  const Eigen::MatrixXcd x = (a + ad);
  const Eigen::MatrixXcd coupling =
      eff.beta * x + eff.gamma * ops::position_squared(cutoff).cast<cd>();
  const Eigen::MatrixXcd decoupling = expm_i_hermitian(kron(coupling, jy), 1.0);

  // S(xi)|0> (x) |j,-j>
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(nb * ns);
  for (Index n = 0; n < nb; ++n) psi(n * ns) = squeeze(n, 0);
  psi = decoupling * psi;

  // (D (x) R) psi  ==  D C R^T  for C(n, mi) = psi(n * ns + mi).
  using RowMajorC = Eigen::Matrix<cd, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  Eigen::Map<RowMajorC> coeffs(psi.data(), nb, ns);
  const RowMajorC rotated = displacement * coeffs * rotation.transpose();
  Eigen::VectorXcd out = Eigen::Map<const Eigen::VectorXcd>(rotated.data(), nb * ns);

  const double tail = ops::fock_tail_population(out.cwiseAbs2(), cutoff, n_atoms);
  if (tail > kAnsatzTailLimit) {
    throw NumericalError("build_ansatz_state: cutoff " + std::to_string(cutoff) +
                         " too small, tail population " + std::to_string(tail));
  }
  out.normalize();
  return out;
}

double state_fidelity(const Eigen::VectorXd& reference, const Eigen::VectorXcd& state) {
  if (reference.size() != state.size()) {
    throw InvalidArgument("state_fidelity: dimension mismatch");
  }
  const cd overlap = reference.cast<cd>().dot(state);
  return std::norm(overlap) / (reference.squaredNorm() * state.squaredNorm());
}

double spin_variance_prediction(const ModelParams&, const CoEffective& eff) {
  return eff.beta * eff.beta;
}

}  // namespace bdicke
