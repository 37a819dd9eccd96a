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

#include "bdicke/operators.hpp"

#include <cmath>
#include <complex>

#include "bdicke/error.hpp"

namespace bdicke::ops {

Eigen::MatrixXd spin_raise(int n_atoms) {
  if (n_atoms < 1) throw InvalidArgument("spin operators need n_atoms >= 1");
  const double j = 0.5 * n_atoms;
  Eigen::MatrixXd sp = Eigen::MatrixXd::Zero(n_atoms + 1, n_atoms + 1);
  for (int mi = 0; mi < n_atoms; ++mi) {
    const double m = mi - j;
    sp(mi + 1, mi) = std::sqrt(j * (j + 1.0) - m * (m + 1.0));
  }
  return sp;
}

Eigen::MatrixXd spin_jz(int n_atoms) {
  if (n_atoms < 1) throw InvalidArgument("spin operators need n_atoms >= 1");
  Eigen::VectorXd d(n_atoms + 1);
  for (int mi = 0; mi <= n_atoms; ++mi) d(mi) = 2.0 * mi - n_atoms;  // 2m
  return d.asDiagonal();
}

Eigen::MatrixXd spin_jx(int n_atoms) {
  const Eigen::MatrixXd sp = spin_raise(n_atoms);
  return sp + sp.transpose();
}

Eigen::MatrixXcd spin_jy(int n_atoms) {
  const Eigen::MatrixXd sp = spin_raise(n_atoms);
  const Eigen::MatrixXd diff = sp - sp.transpose();
  return std::complex<double>(0.0, -1.0) * diff.cast<std::complex<double>>();
}

Eigen::MatrixXd annihilation(int cutoff) {
  if (cutoff < 1) throw InvalidArgument("boson cutoff must be >= 1");
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(cutoff + 1, cutoff + 1);
  for (int n = 1; n <= cutoff; ++n) a(n - 1, n) = std::sqrt(double(n));
  return a;
}

Eigen::MatrixXd position_squared(int cutoff) {
  if (cutoff < 1) throw InvalidArgument("boson cutoff must be >= 1");
  Eigen::MatrixXd x2 = Eigen::MatrixXd::Zero(cutoff + 1, cutoff + 1);
  for (int n = 0; n <= cutoff; ++n) {
    x2(n, n) = 2.0 * n + 1.0;
    if (n + 2 <= cutoff) {
      const double v = std::sqrt((n + 1.0) * (n + 2.0));
      x2(n + 2, n) = v;
      x2(n, n + 2) = v;
    }
  }
  return x2;
}

double fock_tail_population(const Eigen::VectorXd& probabilities, int cutoff, int n_atoms) {
  const int levels = cutoff + 1;
  const int dim_spin = n_atoms + 1;
  if (probabilities.size() != Eigen::Index(levels) * dim_spin) {
    throw InvalidArgument("fock_tail_population: size mismatch");
  }
  const int top = (levels + 9) / 10;
  const Eigen::Index start = Eigen::Index(levels - top) * dim_spin;
  const double total = probabilities.sum();
  return total > 0.0 ? probabilities.tail(probabilities.size() - start).sum() / total : 0.0;
}

}  // namespace bdicke::ops
