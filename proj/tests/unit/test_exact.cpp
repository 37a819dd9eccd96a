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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "bdicke/co_limit.hpp"
#include "bdicke/exact.hpp"
#include "bdicke/operators.hpp"

using namespace bdicke;

TEST(Hamiltonian, DecoupledQubitOscillator) {
  const auto p = ModelParams::make(1.0, 3.0, 0, 0, 1);
  const auto e = symmetric_eigensolve(build_hamiltonian(p, 1).to_dense());
  std::vector<double> expect{-1.5, 1.5, 1.0 - 1.5, 1.0 + 1.5};
  std::sort(expect.begin(), expect.end());
  for (int i = 0; i < 4; ++i) EXPECT_NEAR(e.values(i), expect[i], 1e-14);
}

TEST(Hamiltonian, SingleFlipElement) {
  const auto p = ModelParams::make(1.0, 3.0, 0, 0.37, 1);
  const auto h = build_hamiltonian(p, 4);
  EXPECT_DOUBLE_EQ(h(ops::product_index(1, 1, 1), ops::product_index(0, 0, 1)), 0.37);
  EXPECT_DOUBLE_EQ(h(ops::product_index(0, 0, 1), ops::product_index(1, 1, 1)), 0.37);
}

TEST(Hamiltonian, SymmetricAndMatchesKroneckerBuild) {
  const auto p = ModelParams::make(1.1, 2.3, 0.4, 0.6, 3, 0.9);
  const int nc = 12;
  const Eigen::MatrixXd h = build_hamiltonian(p, nc).to_dense();
  EXPECT_EQ((h - h.transpose()).cwiseAbs().maxCoeff(), 0.0);
  const Eigen::MatrixXd a = ops::annihilation(nc);
  const Eigen::MatrixXd x = a + a.transpose();
  const Eigen::MatrixXd is = Eigen::MatrixXd::Identity(4, 4);
  const Eigen::MatrixXd ib = Eigen::MatrixXd::Identity(nc + 1, nc + 1);
  const Eigen::MatrixXd ref =
      kron(p.omega() * a.transpose() * a + p.kappa0() * ops::position_squared(nc), is) +
      kron(ib, 0.5 * p.Omega() * ops::spin_jz(3) + 0.5 * p.epsilon() * ops::spin_jx(3)) +
      p.lambda() * kron(x, ops::spin_jx(3));
  EXPECT_LE((h - ref).cwiseAbs().maxCoeff(), 1e-13);
}

TEST(Hamiltonian, UnbiasedParity) {
  for (double a0 : {0.0, 1.2}) {
    const auto p = ModelParams::make(1, 5, 0, 1.3, 4, a0);
    EXPECT_LT(parity_commutator_norm(build_hamiltonian(p, 30), 30, 4), 1e-12);
    const auto b = ModelParams::make(1, 5, 0.2, 1.3, 4, a0);
    EXPECT_GT(parity_commutator_norm(build_hamiltonian(b, 30), 30, 4), 0.1);
  }
}

TEST(Diagonalize, FrozenDenseSpectrum) {
  // Frozen from an independent dense numpy build of the same Hamiltonian.
  const auto r = diagonalize(ModelParams::make(1.0, 3.0, 0.4, 0.7, 2), 40);
  const double ref[] = {-3.5142952256099798, -3.0298632039678455, -2.557775299539624,
                        -1.9777529315909386, -1.3644700121474225};
  for (int i = 0; i < 5; ++i) EXPECT_NEAR(r.eigenvalues(i), ref[i], 1e-11);
  EXPECT_EQ(r.eigenvalues.size(), 41 * 3);
  EXPECT_NEAR(r.ground_vector.norm(), 1.0, 1e-10);
  EXPECT_NEAR(r.observables.entropy, 0.2127163562715921, 1e-9);
  EXPECT_NEAR(r.observables.n_photons, 0.7698051121756738, 1e-9);
  EXPECT_NEAR(r.observables.j_z, -1.497065440619295, 1e-9);
  EXPECT_NEAR(r.observables.var_jx, 1.5338027778071963, 1e-9);
}

TEST(Diagonalize, FrozenDenseSpectrumA2) {
  const auto r = diagonalize(ModelParams::make(1.0, 3.0, 0.4, 0.7, 2, 1.1), 40);
  const double ref[] = {-2.9176134670692067, -1.817478570729918, -0.6372027998792793,
                        0.4238157751043423, 0.6572955576795165};
  for (int i = 0; i < 5; ++i) EXPECT_NEAR(r.eigenvalues(i), ref[i], 1e-11);
}

TEST(Diagonalize, DenseAndBandAgree) {
  const auto p = ModelParams::from_rescaled(1, 8, 1.4, 0.05, 3);
  const auto r = diagonalize(p, 30);
  const auto d = diagonalize_dense(p, 30);
  EXPECT_LE((r.eigenvalues - d.values).cwiseAbs().maxCoeff(), 1e-10);
  EXPECT_NEAR(std::abs(r.ground_vector.dot(d.vectors.col(0))), 1.0, 1e-10);
}

TEST(Converged, DecoupledFirstStep) {
  const auto r = diagonalize_converged(ModelParams::make(1, 7, 0, 0, 3));
  EXPECT_TRUE(r.convergence.converged);
  EXPECT_EQ(r.convergence.cutoffs.size(), 2u);
  EXPECT_DOUBLE_EQ(r.eigenvalues(0), -0.5 * 3 * 7);
  const auto& o = r.observables;
  EXPECT_NEAR(o.entropy, 0.0, 1e-14);
  EXPECT_NEAR(o.var_x, 0.5, 1e-14);
  EXPECT_NEAR(o.var_p, 0.5, 1e-14);
  // |j,-j> is a J_z eigenstate: its fluctuation along the mean spin vanishes,
  // while the transverse lab-frame Var(J_x) is N.
  EXPECT_NEAR(o.var_j_longitudinal, 0.0, 1e-14);
  EXPECT_NEAR(o.var_jx, 3.0, 1e-13);
  EXPECT_NEAR(o.j_z, -3.0, 1e-14);
}

TEST(Converged, FigureSetupSelfConvergence) {
  const auto p = ModelParams::from_rescaled(1, 60, 1.5, 0.11, 5);
  const auto r = diagonalize_converged(p);
  ASSERT_TRUE(r.convergence.converged);
  EXPECT_LT(r.convergence.energy_change, 1e-10);
  EXPECT_LT(r.convergence.tail, 1e-10);
  const auto& e = r.convergence.ground_energies;
  for (std::size_t i = 1; i < e.size(); ++i) EXPECT_LE(e[i], e[i - 1] + 1e-12);
  EXPECT_GE(r.cutoff, 256);
}

TEST(Converged, HardLimitCarriesBestResult) {
  const auto p = ModelParams::from_rescaled(1, 60, 2.0, 0.11, 5);
  ConvergenceOptions o;
  o.max_cutoff = 128;
  try {
    diagonalize_converged(p, o);
    FAIL();
  } catch (const ConvergenceError& e) {
    EXPECT_EQ(e.best().cutoff, 128);
    EXPECT_FALSE(e.best().convergence.converged);
  }
  o.tol_energy = 0;
  EXPECT_THROW(diagonalize_converged(p, o), InvalidArgument);
}

TEST(Converged, PhotonsApproachMeanField) {
  double prev = 1e9;
  for (double r : {20.0, 60.0, 180.0}) {
    const auto p = ModelParams::from_rescaled(1, r, 1.5, 0.11, 5);
    const auto res = diagonalize_converged(p);
    const double a = ground_solution(p).alpha;
    const double dev = std::abs(res.observables.n_photons / (a * a) - 1);
    EXPECT_LT(dev, prev);
    prev = dev;
  }
  EXPECT_LT(prev, 0.02);
}

TEST(Spectrum, PureOscillatorLadder) {
  const auto r = diagonalize(ModelParams::make(1, 60, 0, 0, 1), 40);
  const auto g = excitation_spectrum(r, 30);
  for (int i = 0; i < 30; ++i) EXPECT_NEAR(g[i], i + 1.0, 1e-12);
  EXPECT_THROW(excitation_spectrum(r, int(r.eigenvalues.size())), InvalidArgument);
}

TEST(Observables, VarianceCheckAgainstCoLimit) {
  const auto p = ModelParams::from_rescaled(1, 200, 0.8, 0.1, 3);
  const auto r = diagonalize_converged(p);
  const auto v = co_field_variances(co_effective(p, ground_solution(p)), 1.0);
  EXPECT_LT(std::abs(r.observables.var_x / v.var_x - 1), 0.05);
}

TEST(Observables, EntropyFallsWithRatio) {
  double prev = 1e9;
  for (double ratio : {20.0, 60.0, 200.0}) {
    const auto r = diagonalize_converged(ModelParams::from_rescaled(1, ratio, 1.2, 0.1, 5));
    EXPECT_LT(r.observables.entropy, prev);
    prev = r.observables.entropy;
  }
}

TEST(Observables, EigenvectorParityUnbiased) {
  const auto p = ModelParams::from_rescaled(1, 4, 1.6, 0.0, 2);
  const int nc = 40;
  const auto d = diagonalize_dense(p, nc);
  const Eigen::VectorXd par = parity_diagonal(nc, 2);
  for (int i = 0; i < 40; ++i) {
    const double lo = i > 0 ? d.values(i) - d.values(i - 1) : INFINITY;
    const double hi = d.values(i + 1) - d.values(i);
    if (std::min(lo, hi) < 1e-10) continue;
    EXPECT_NEAR(std::abs(d.vectors.col(i).cwiseAbs2().dot(par)), 1.0, 1e-8) << i;
  }
}
