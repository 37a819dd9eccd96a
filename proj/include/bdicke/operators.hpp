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

#ifndef BDICKE_OPERATORS_HPP
#define BDICKE_OPERATORS_HPP

#include <Eigen/Dense>

namespace bdicke {

// Matrix representations used throughout the library.
//
// Conventions:
//   * Collective spin J_i = sum_k sigma_i^k = 2 S_i, with S the standard
//     spin-j operators, j = N/2. Hence J_z |j,m> = 2m |j,m>, J_x = S+ + S-,
//     J_y = -i (S+ - S-), and [J_x, J_y] = 2i J_z.
//   * Spin basis index mi = 0..N labels m = mi - j, so mi = 0 is |j,-j>.
//   * Fock basis |n>, n = 0..cutoff. Product basis index n * (N+1) + mi
//     (boson index outer, spin index inner).
//   * Field quadratures x = (a + a^dag) / sqrt(2 omega),
//     p = i (a^dag - a) sqrt(omega / 2).
namespace ops {

Eigen::MatrixXd spin_raise(int n_atoms);  // S+
Eigen::MatrixXd spin_jz(int n_atoms);
Eigen::MatrixXd spin_jx(int n_atoms);
Eigen::MatrixXcd spin_jy(int n_atoms);

Eigen::MatrixXd annihilation(int cutoff);  // truncated a, (cutoff+1)^2

// <n'|(a + a^dag)^2|n> with the untruncated matrix elements (diagonal 2n+1).
Eigen::MatrixXd position_squared(int cutoff);

inline Eigen::Index product_index(int n, int mi, int n_atoms) {
  return static_cast<Eigen::Index>(n) * (n_atoms + 1) + mi;
}

// Share of the total weight carried by the top 10% of Fock levels,
// n >= cutoff + 1 - ceil((cutoff + 1) / 10). `probabilities` holds |psi|^2 in
// product-basis order.
double fock_tail_population(const Eigen::VectorXd& probabilities, int cutoff, int n_atoms);

}  // namespace ops
}  // namespace bdicke

#endif  // BDICKE_OPERATORS_HPP
