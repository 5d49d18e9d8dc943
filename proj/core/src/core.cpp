// Copyright 2026 The nmq Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "nmq/core.hpp"

#include <string>

namespace nmq {

namespace {

Matrix make_sigma(int j) {
  Matrix m(2, 2);
  switch (j) {
    case 0:
      m << 1, 0, 0, 1;
      break;
    case 1:
      m << 0, 1, 1, 0;
      break;
    case 2:
      m << 0, Complex(0, -1), Complex(0, 1), 0;
      break;
    case 3:
      m << 1, 0, 0, -1;
      break;
    default:
      throw std::invalid_argument("pauli index must be in [0, 3]");
  }
  return m;
}

}  // namespace

const Matrix& identity2() {
  static const Matrix m = make_sigma(0);
  return m;
}

const Matrix& sigma_x() {
  static const Matrix m = make_sigma(1);
  return m;
}

const Matrix& sigma_y() {
  static const Matrix m = make_sigma(2);
  return m;
}

const Matrix& sigma_z() {
  static const Matrix m = make_sigma(3);
  return m;
}

const Matrix& pauli(int j) {
  switch (j) {
    case 0:
      return identity2();
    case 1:
      return sigma_x();
    case 2:
      return sigma_y();
    case 3:
      return sigma_z();
    default:
      throw std::invalid_argument("pauli index must be in [0, 3]");
  }
}

double max_abs(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().maxCoeff();
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("max_abs_diff: shape mismatch");
  }
  return max_abs(a - b);
}

bool all_finite(const Matrix& m) {
  return m.allFinite();
}

bool is_hermitian(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return max_abs(Matrix(m - m.adjoint())) <= tol;
}

Vector vec_row_major(const Matrix& m) {
  Vector v(m.size());
  for (Index r = 0; r < m.rows(); ++r) {
    for (Index s = 0; s < m.cols(); ++s) {
      v(r * m.cols() + s) = m(r, s);
    }
  }
  return v;
}

Matrix unvec_row_major(const Vector& v, Index rows, Index cols) {
  if (v.size() != rows * cols) {
    throw std::invalid_argument("unvec_row_major: size mismatch");
  }
  Matrix m(rows, cols);
  for (Index r = 0; r < rows; ++r) {
    for (Index s = 0; s < cols; ++s) {
      m(r, s) = v(r * cols + s);
    }
  }
  return m;
}

DensityMatrix::DensityMatrix(Matrix m, double tol) : m_(std::move(m)) {
  if (m_.rows() != m_.cols() || m_.rows() == 0) {
    throw std::invalid_argument("DensityMatrix: matrix must be square");
  }
  if (!all_finite(m_)) {
    throw std::invalid_argument("DensityMatrix: entries must be finite");
  }
  const double trace_err = std::abs(m_.trace() - Complex(1.0, 0.0));
  if (trace_err > tol) {
    throw std::invalid_argument("DensityMatrix: trace differs from 1 by " +
                                std::to_string(trace_err));
  }
  if (!is_hermitian(m_, tol)) {
    throw std::invalid_argument("DensityMatrix: not Hermitian within tolerance");
  }
  const double min_eig = min_eigenvalue(m_, tol);
  if (min_eig < -tol) {
    throw std::invalid_argument("DensityMatrix: negative eigenvalue " +
                                std::to_string(min_eig));
  }
}

double DensityMatrix::purity() const {
  return (m_ * m_).trace().real();
}

DensityMatrix bloch_to_density(const BlochVector& a) {
  Matrix m = 0.5 * (identity2() + a.a1 * sigma_x() + a.a2 * sigma_y() +
                    a.a3 * sigma_z());
  return DensityMatrix(std::move(m));
}

BlochVector density_to_bloch(const DensityMatrix& eta) {
  if (eta.dim() != 2) {
    throw std::invalid_argument("density_to_bloch: requires a qubit state");
  }
  const Matrix& m = eta.matrix();
  BlochVector a;
  a.a1 = (m * sigma_x()).trace().real();
  a.a2 = (m * sigma_y()).trace().real();
  a.a3 = (m * sigma_z()).trace().real();
  return a;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Matrix partial_trace_env(const Matrix& x, Index dim_s, Index dim_e) {
  if (dim_s <= 0 || dim_e <= 0 || x.rows() != x.cols() ||
      x.rows() != dim_s * dim_e) {
    throw std::invalid_argument("partial_trace_env: dimension mismatch");
  }
  Matrix out = Matrix::Zero(dim_s, dim_s);
  for (Index r = 0; r < dim_s; ++r) {
    for (Index s = 0; s < dim_s; ++s) {
      Complex acc(0.0, 0.0);
      for (Index k = 0; k < dim_e; ++k) {
        acc += x(r * dim_e + k, s * dim_e + k);
      }
      out(r, s) = acc;
    }
  }
  return out;
}

Matrix partial_trace_env(const BipartiteOperator& x) {
  return partial_trace_env(x.matrix, x.dim_s, x.dim_e);
}

Matrix unitary_propagator(const Matrix& h, double dt) {
  if (!is_hermitian(h)) {
    throw std::invalid_argument("unitary_propagator: Hamiltonian not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
  const Eigen::VectorXd& w = solver.eigenvalues();
  const Matrix& v = solver.eigenvectors();
  Vector phases(w.size());
  for (Index i = 0; i < w.size(); ++i) {
    phases(i) = std::exp(Complex(0.0, -dt * w(i)));
  }
  return v * phases.asDiagonal() * v.adjoint();
}

double min_eigenvalue(const Matrix& x, double herm_tol) {
  if (!is_hermitian(x, herm_tol)) {
    throw std::invalid_argument("min_eigenvalue: matrix not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(x, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

}  // namespace nmq
