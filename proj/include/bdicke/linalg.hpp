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

#ifndef BDICKE_LINALG_HPP
#define BDICKE_LINALG_HPP

#include <Eigen/Dense>

namespace bdicke {

using Index = Eigen::Index;

struct SymmetricEigen {
  Eigen::VectorXd values;   // ascending
  Eigen::MatrixXd vectors;  // column i belongs to values(i)
};

/// Full eigendecomposition of a real symmetric matrix.
///
/// The input must be square and symmetric to 1e-12 relative to its largest
/// entry. Eigenvalues are returned ascending with orthonormal eigenvectors;
/// a LAPACK convergence failure raises NumericalError carrying the LAPACK
/// info code.
SymmetricEigen symmetric_eigensolve(const Eigen::MatrixXd& matrix);

/// Real symmetric matrix with all nonzeros within `bandwidth` of the diagonal.
/// Stored as the lower band in LAPACK layout: band(i - j, j) = A(i, j), i >= j.
class SymmetricBandMatrix {
 public:
  SymmetricBandMatrix(Index size, Index bandwidth);

  Index size() const { return size_; }
  Index bandwidth() const { return bandwidth_; }

  // Zero outside the band.
  double operator()(Index i, Index j) const;
  void add(Index i, Index j, double value);

  Eigen::VectorXd multiply(const Eigen::VectorXd& x) const;
  Eigen::MatrixXd to_dense() const;
  double max_abs() const;

  const Eigen::MatrixXd& lower_band() const { return band_; }

 private:
  Index size_;
  Index bandwidth_;
  Eigen::MatrixXd band_;
};

// All eigenvalues, ascending.
Eigen::VectorXd band_eigenvalues(const SymmetricBandMatrix& matrix);

struct Eigenpair {
  double value = 0.0;
  Eigen::VectorXd vector;
  double residual = 0.0;  // ||A v - value v||
};

// Eigenvector for an accurately known eigenvalue, by shifted inverse iteration
// on the band LU factorization.
Eigenpair band_eigenvector(const SymmetricBandMatrix& matrix, double eigenvalue);

/// exp(i * scale * H) for Hermitian H (checked to 1e-10), via the
/// eigendecomposition of H; unitary to eigensolver accuracy.
Eigen::MatrixXcd expm_i_hermitian(const Eigen::MatrixXcd& hermitian, double scale);

// exp(scale * G) for anti-Hermitian G.
Eigen::MatrixXcd expm_antihermitian(const Eigen::MatrixXcd& generator, double scale);

Eigen::MatrixXd kron(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);
Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

}  // namespace bdicke

#endif  // BDICKE_LINALG_HPP
