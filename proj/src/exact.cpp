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

#include "bdicke/exact.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bdicke/operators.hpp"

namespace bdicke {

namespace {

constexpr double kEntropyCutoff = 1e-14;

// S+ matrix element <m+1|S+|m> for m = mi - j.
double raise_element(int mi, int n_atoms) {
  const double j = 0.5 * n_atoms;
  const double m = mi - j;
  return std::sqrt(j * (j + 1.0) - m * (m + 1.0));
}

}  // namespace

SymmetricBandMatrix build_hamiltonian(const ModelParams& params, int cutoff) {
  if (cutoff < 1) throw InvalidArgument("build_hamiltonian: cutoff must be >= 1");
  const int n_atoms = params.n_atoms();
  const int ns = n_atoms + 1;
  const double omega = params.omega();
  const double kappa0 = params.kappa0();
  const Index dim = Index(cutoff + 1) * ns;
  SymmetricBandMatrix h(dim, kappa0 > 0.0 ? 2 * ns : ns + 1);

  for (int n = 0; n <= cutoff; ++n) {
    for (int mi = 0; mi <= n_atoms; ++mi) {
      const Index i = ops::product_index(n, mi, n_atoms);
      h.add(i, i, omega * n + 0.5 * params.Omega() * (2 * mi - n_atoms) + kappa0 * (2 * n + 1));
      if (mi < n_atoms) {
        // J_x = S+ + S-, real symmetric.
        const double jx = raise_element(mi, n_atoms);
        h.add(ops::product_index(n, mi + 1, n_atoms), i, 0.5 * params.epsilon() * jx);
        if (n < cutoff) {
          const double c = params.lambda() * jx * std::sqrt(double(n + 1));
          h.add(ops::product_index(n + 1, mi + 1, n_atoms), i, c);
          h.add(ops::product_index(n + 1, mi, n_atoms), ops::product_index(n, mi + 1, n_atoms), c);
        }
      }
      if (kappa0 > 0.0 && n + 2 <= cutoff) {
        h.add(ops::product_index(n + 2, mi, n_atoms), i,
              kappa0 * std::sqrt(double(n + 1) * double(n + 2)));
      }
    }
  }
  return h;
}

double tail_population(const Eigen::VectorXd& state, int cutoff, int n_atoms) {
  return ops::fock_tail_population(state.cwiseAbs2(), cutoff, n_atoms);
}

Observables ground_observables(const Eigen::VectorXd& state, const ModelParams& params,
                               int cutoff) {
  const int n_atoms = params.n_atoms();
  const Index nb = cutoff + 1;
  const Index ns = n_atoms + 1;
  if (state.size() != nb * ns) throw InvalidArgument("ground_observables: size mismatch");
  const double norm2 = state.squaredNorm();
  using RowMajor = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  const Eigen::Map<const RowMajor> c(state.data(), nb, ns);

  Observables o;
  double x1 = 0.0;  // <a + a^dag>
  double x2 = 0.0;  // <(a + a^dag)^2>
  double pair = 0.0;  // <a^2 + a^dag^2>
  for (Index n = 0; n < nb; ++n) {
    const double w = c.row(n).squaredNorm();
    o.n_photons += n * w;
    x2 += (2.0 * n + 1.0) * w;
    if (n + 1 < nb) x1 += 2.0 * std::sqrt(double(n + 1)) * c.row(n + 1).dot(c.row(n));
    if (n + 2 < nb) pair += 2.0 * std::sqrt(double(n + 1) * double(n + 2)) * c.row(n + 2).dot(c.row(n));
  }
  o.n_photons /= norm2;
  x1 /= norm2;
  pair /= norm2;
  x2 = x2 / norm2 + pair;
  const double omega = params.omega();
  o.var_x = (x2 - x1 * x1) / (2.0 * omega);
  // p^2 = (omega/2)(2n + 1 - a^2 - a^dag^2); <p> = 0 for a real state.
  o.var_p = 0.5 * omega * (x2 - 2.0 * pair);

  const Eigen::MatrixXd rho = c.transpose() * c / norm2;
  const Eigen::MatrixXd jz = ops::spin_jz(n_atoms);
  const Eigen::MatrixXd jx = ops::spin_jx(n_atoms);
  o.j_z = (rho * jz).trace();
  o.j_x = (rho * jx).trace();
  o.var_jx = (rho * jx * jx).trace() - o.j_x * o.j_x;
  const double len = std::hypot(o.j_x, o.j_z);
  if (len > 0.0) {
    const Eigen::MatrixXd jn = (o.j_x * jx + o.j_z * jz) / len;
    o.var_j_longitudinal = (rho * jn * jn).trace() - len * len;
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(rho, Eigen::EigenvaluesOnly);
  for (Index k = 0; k < es.eigenvalues().size(); ++k) {
    const double p = es.eigenvalues()(k);
    if (p >= kEntropyCutoff) o.entropy -= p * std::log(p);
  }

  o.parity = state.cwiseAbs2().dot(parity_diagonal(cutoff, n_atoms)) / norm2;
  return o;
}

SpectrumResult diagonalize(const ModelParams& params, int cutoff) {
  const SymmetricBandMatrix h = build_hamiltonian(params, cutoff);
  SpectrumResult r;
  r.cutoff = cutoff;
  r.n_atoms = params.n_atoms();
  r.eigenvalues = band_eigenvalues(h);
  Eigenpair ground = band_eigenvector(h, r.eigenvalues(0));
  const double tol = 1e-9 * std::max(h.max_abs(), 1.0);
  if (!(ground.residual < tol)) {
    throw NumericalError("diagonalize: ground-state residual " + std::to_string(ground.residual));
  }
  r.ground_vector = std::move(ground.vector);
  r.observables = ground_observables(r.ground_vector, params, cutoff);
  r.convergence.cutoffs = {cutoff};
  r.convergence.ground_energies = {r.eigenvalues(0)};
  r.convergence.tail = tail_population(r.ground_vector, cutoff, r.n_atoms);
  r.convergence.tails = {r.convergence.tail};
  return r;
}

SpectrumResult diagonalize_converged(const ModelParams& params, const ConvergenceOptions& options) {
  if (!(options.tol_energy > 0.0) || !(options.tol_tail > 0.0)) {
    throw InvalidArgument("diagonalize_converged: tolerances must be > 0");
  }
  if (options.initial_cutoff < 1 || options.max_cutoff < options.initial_cutoff) {
    throw InvalidArgument("diagonalize_converged: need 1 <= initial_cutoff <= max_cutoff");
  }
  ConvergenceInfo info;
  SpectrumResult prev = diagonalize(params, options.initial_cutoff);
  info.cutoffs.push_back(prev.cutoff);
  info.ground_energies.push_back(prev.eigenvalues(0));
  info.tails.push_back(prev.convergence.tail);

  while (true) {
    const int next = 2 * prev.cutoff;
    if (next > options.max_cutoff) {
      prev.convergence = info;
      prev.convergence.converged = false;
      throw ConvergenceError("diagonalize_converged: not converged at max cutoff " +
                                 std::to_string(options.max_cutoff) + " (last energy change " +
                                 std::to_string(info.energy_change) + ", tail " +
                                 std::to_string(info.tail) + ")",
                             std::move(prev));
    }
    SpectrumResult cur = diagonalize(params, next);
    info.cutoffs.push_back(cur.cutoff);
    info.ground_energies.push_back(cur.eigenvalues(0));
    info.tails.push_back(cur.convergence.tail);
    info.energy_change = std::abs(cur.eigenvalues(0) - prev.eigenvalues(0)) / params.omega();
    info.tail = cur.convergence.tail;
    prev = std::move(cur);
    if (info.energy_change < options.tol_energy && info.tail < options.tol_tail) {
      info.converged = true;
      prev.convergence = info;
      return prev;
    }
  }
}

SymmetricEigen diagonalize_dense(const ModelParams& params, int cutoff) {
  return symmetric_eigensolve(build_hamiltonian(params, cutoff).to_dense());
}

std::vector<double> excitation_spectrum(const SpectrumResult& result, int k) {
  if (k < 0 || k >= result.eigenvalues.size()) {
    throw InvalidArgument("excitation_spectrum: k must be in [0, dimension)");
  }
  std::vector<double> gaps(k);
  for (int i = 0; i < k; ++i) gaps[i] = result.eigenvalues(i + 1) - result.eigenvalues(0);
  return gaps;
}

Eigen::VectorXd parity_diagonal(int cutoff, int n_atoms) {
  Eigen::VectorXd p(Index(cutoff + 1) * (n_atoms + 1));
  for (int n = 0; n <= cutoff; ++n) {
    for (int mi = 0; mi <= n_atoms; ++mi) {
      p(ops::product_index(n, mi, n_atoms)) = ((n + mi) % 2 == 0) ? 1.0 : -1.0;
    }
  }
  return p;
}

double parity_commutator_norm(const SymmetricBandMatrix& hamiltonian, int cutoff, int n_atoms) {
  const Eigen::VectorXd p = parity_diagonal(cutoff, n_atoms);
  if (p.size() != hamiltonian.size()) {
    throw InvalidArgument("parity_commutator_norm: size mismatch");
  }
  // [H, Pi]_ij = H_ij (p_j - p_i).
  double worst = 0.0;
  for (Index j = 0; j < hamiltonian.size(); ++j) {
    const Index hi = std::min(hamiltonian.size() - 1, j + hamiltonian.bandwidth());
    for (Index i = j; i <= hi; ++i) {
      worst = std::max(worst, std::abs(hamiltonian(i, j) * (p(j) - p(i))));
    }
  }
  return worst;
}

}  // namespace bdicke
