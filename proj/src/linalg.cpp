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

#include "bdicke/linalg.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "bdicke/error.hpp"

namespace bdicke {

namespace {

constexpr double kSymmetryTol = 1e-12;
constexpr double kHermitianTol = 1e-10;

void require_square(Index rows, Index cols, const char* who) {
  if (rows != cols || rows == 0) {
    throw InvalidArgument(std::string(who) + ": expected a non-empty square matrix, got " +
                          std::to_string(rows) + "x" + std::to_string(cols));
  }
}

}  // namespace

SymmetricEigen symmetric_eigensolve(const Eigen::MatrixXd& matrix) {
  require_square(matrix.rows(), matrix.cols(), "symmetric_eigensolve");
  const double scale = std::max(matrix.cwiseAbs().maxCoeff(), std::numeric_limits<double>::min());
  const double asym = (matrix - matrix.transpose()).cwiseAbs().maxCoeff();
  if (asym > kSymmetryTol * scale) {
    throw InvalidArgument("symmetric_eigensolve: matrix is not symmetric (max |A - A^T| = " +
                          std::to_string(asym) + ")");
  }

  const lapack_int n = static_cast<lapack_int>(matrix.rows());
  Eigen::MatrixXd a = 0.5 * (matrix + matrix.transpose());
  SymmetricEigen out;
  out.values.resize(n);
  out.vectors.resize(n, n);
  std::vector<lapack_int> support(2 * static_cast<std::size_t>(n));
  lapack_int found = 0;
  const lapack_int info =
      LAPACKE_dsyevr(LAPACK_COL_MAJOR, 'V', 'A', 'L', n, a.data(), n, 0.0, 0.0, 0, 0, 0.0, &found,
                     out.values.data(), out.vectors.data(), n, support.data());
  if (info != 0 || found != n) {
    throw NumericalError("symmetric_eigensolve: dsyevr failed to converge (info=" +
                         std::to_string(info) + ")");
  }
  return out;
}

SymmetricBandMatrix::SymmetricBandMatrix(Index size, Index bandwidth)
    : size_(size), bandwidth_(bandwidth) {
  if (size <= 0 || bandwidth < 0) {
    throw InvalidArgument("SymmetricBandMatrix: invalid size/bandwidth");
  }
  bandwidth_ = std::min(bandwidth, size - 1);
  band_ = Eigen::MatrixXd::Zero(bandwidth_ + 1, size);
}

double SymmetricBandMatrix::operator()(Index i, Index j) const {
  if (i < j) std::swap(i, j);
  if (i - j > bandwidth_) return 0.0;
  return band_(i - j, j);
}

void SymmetricBandMatrix::add(Index i, Index j, double value) {
  if (i < j) std::swap(i, j);
  if (i >= size_ || j < 0 || i - j > bandwidth_) {
    throw InvalidArgument("SymmetricBandMatrix::add: element outside the band");
  }
  band_(i - j, j) += value;
}

Eigen::VectorXd SymmetricBandMatrix::multiply(const Eigen::VectorXd& x) const {
  if (x.size() != size_) throw InvalidArgument("SymmetricBandMatrix::multiply: size mismatch");
  Eigen::VectorXd y = band_.row(0).transpose().cwiseProduct(x);
  for (Index d = 1; d <= bandwidth_; ++d) {
    for (Index j = 0; j + d < size_; ++j) {
      const double v = band_(d, j);
      y(j + d) += v * x(j);
      y(j) += v * x(j + d);
    }
  }
  return y;
}

Eigen::MatrixXd SymmetricBandMatrix::to_dense() const {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(size_, size_);
  for (Index d = 0; d <= bandwidth_; ++d) {
    for (Index j = 0; j + d < size_; ++j) {
      a(j + d, j) = band_(d, j);
      a(j, j + d) = band_(d, j);
    }
  }
  return a;
}

double SymmetricBandMatrix::max_abs() const { return band_.cwiseAbs().maxCoeff(); }

Eigen::VectorXd band_eigenvalues(const SymmetricBandMatrix& matrix) {
  const lapack_int n = static_cast<lapack_int>(matrix.size());
  const lapack_int kd = static_cast<lapack_int>(matrix.bandwidth());
  Eigen::MatrixXd ab = matrix.lower_band();
  Eigen::VectorXd w(n);
  const lapack_int info =
      LAPACKE_dsbev(LAPACK_COL_MAJOR, 'N', 'L', n, kd, ab.data(), kd + 1, w.data(), nullptr, 1);
  if (info != 0) {
    throw NumericalError("band_eigenvalues: dsbev failed to converge (info=" +
                         std::to_string(info) + ")");
  }
  return w;
}

Eigenpair band_eigenvector(const SymmetricBandMatrix& matrix, double eigenvalue) {
  const lapack_int n = static_cast<lapack_int>(matrix.size());
  const lapack_int kd = static_cast<lapack_int>(matrix.bandwidth());
  const lapack_int ldab = 3 * kd + 1;
  const double scale = std::max({matrix.max_abs(), std::abs(eigenvalue), 1.0});

  // Fixed seed: results must not depend on call history.
  std::mt19937_64 rng(0x5eed);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  Eigen::VectorXd x(n);
  for (Index i = 0; i < n; ++i) x(i) = uni(rng);
  x.normalize();

  double delta = 64.0 * std::numeric_limits<double>::epsilon() * scale;
  for (int attempt = 0; attempt < 8; ++attempt, delta *= 100.0) {
    const double shift = eigenvalue - delta;
    Eigen::MatrixXd ab = Eigen::MatrixXd::Zero(ldab, n);
    for (lapack_int j = 0; j < n; ++j) {
      const lapack_int lo = std::max<lapack_int>(0, j - kd);
      const lapack_int hi = std::min<lapack_int>(n - 1, j + kd);
      for (lapack_int i = lo; i <= hi; ++i) {
        double v = matrix(i, j);
        if (i == j) v -= shift;
        ab(2 * kd + i - j, j) = v;
      }
    }
    std::vector<lapack_int> piv(n);
    if (LAPACKE_dgbtrf(LAPACK_COL_MAJOR, n, n, kd, kd, ab.data(), ldab, piv.data()) != 0) {
      continue;  // exactly singular shift; move it away
    }
    Eigen::VectorXd v = x;
    bool ok = true;
    for (int it = 0; it < 4; ++it) {
      if (LAPACKE_dgbtrs(LAPACK_COL_MAJOR, 'N', n, kd, kd, 1, ab.data(), ldab, piv.data(),
                         v.data(), n) != 0 ||
          !v.allFinite()) {
        ok = false;
        break;
      }
      v.normalize();
    }
    if (!ok) continue;
    // Deterministic sign: largest component positive.
    Index imax = 0;
    v.cwiseAbs().maxCoeff(&imax);
    if (v(imax) < 0.0) v = -v;
    const Eigen::VectorXd av = matrix.multiply(v);
    Eigenpair out;
    out.value = v.dot(av);
    out.residual = (av - out.value * v).norm();
    out.vector = std::move(v);
    return out;
  }
  throw NumericalError("band_eigenvector: inverse iteration failed near eigenvalue " +
                       std::to_string(eigenvalue));
}

Eigen::MatrixXcd expm_i_hermitian(const Eigen::MatrixXcd& hermitian, double scale) {
  require_square(hermitian.rows(), hermitian.cols(), "expm_i_hermitian");
  const double dev = (hermitian - hermitian.adjoint()).cwiseAbs().maxCoeff();
  const double mag = std::max(hermitian.cwiseAbs().maxCoeff(), 1.0);
  if (dev > kHermitianTol * mag) {
    throw InvalidArgument("expm_i_hermitian: generator is not Hermitian (deviation " +
                          std::to_string(dev) + ")");
  }
  const lapack_int n = static_cast<lapack_int>(hermitian.rows());
  Eigen::MatrixXcd v = 0.5 * (hermitian + hermitian.adjoint());
  Eigen::VectorXd w(n);
  const lapack_int info =
      LAPACKE_zheevd(LAPACK_COL_MAJOR, 'V', 'L', n,
                     reinterpret_cast<lapack_complex_double*>(v.data()), n, w.data());
  if (info != 0) {
    throw NumericalError("expm_i_hermitian: zheevd failed to converge (info=" +
                         std::to_string(info) + ")");
  }
  Eigen::VectorXcd phases(n);
  for (lapack_int k = 0; k < n; ++k) phases(k) = std::polar(1.0, scale * w(k));
  return v * phases.asDiagonal() * v.adjoint();
}

Eigen::MatrixXcd expm_antihermitian(const Eigen::MatrixXcd& generator, double scale) {
  require_square(generator.rows(), generator.cols(), "expm_antihermitian");
  // G = i H  =>  exp(s G) = exp(i s H) with H = -i G.
  const Eigen::MatrixXcd h = std::complex<double>(0.0, -1.0) * generator;
  return expm_i_hermitian(h, scale);
}

Eigen::MatrixXd kron(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  Eigen::MatrixXd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

}  // namespace bdicke
