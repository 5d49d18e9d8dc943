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

#ifndef NMQ_CORE_HPP
#define NMQ_CORE_HPP

#include <cmath>
#include <complex>
#include <stdexcept>

#include <Eigen/Dense>

namespace nmq {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Index = Eigen::Index;

// Default absolute tolerances. Double-precision eigensolves on the matrix
// sizes handled here (<= 16x16) are accurate to ~1e-13, so 1e-9 leaves
// headroom.
inline constexpr double kHermitianTol = 1e-9;
inline constexpr double kTraceTol = 1e-9;
inline constexpr double kPositivityTol = 1e-9;

/// Thrown when a computation is refused on numerical grounds (near-singular
/// forward map, master-equation step across a singular time, extraction from
/// a map too far from identity). Distinct from std::invalid_argument, which
/// signals malformed input.
class NumericalRefusal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

//=========================================================================
// Small matrix utilities
//=========================================================================

const Matrix& identity2();
const Matrix& sigma_x();
const Matrix& sigma_y();
const Matrix& sigma_z();

/// Pauli matrix by index: pauli(0) = identity, pauli(1..3) = sigma_{x,y,z}.
const Matrix& pauli(int j);

double max_abs(const Matrix& m);
double max_abs_diff(const Matrix& a, const Matrix& b);
bool all_finite(const Matrix& m);
bool is_hermitian(const Matrix& m, double tol = kHermitianTol);

// Row-major flattening: vec(m)[r*cols + s] = m(r, s).
Vector vec_row_major(const Matrix& m);
Matrix unvec_row_major(const Vector& v, Index rows, Index cols);

//=========================================================================
// States
//=========================================================================

struct BlochVector {
  double a1 = 0.0;
  double a2 = 0.0;
  double a3 = 0.0;

  double norm() const { return std::sqrt(a1 * a1 + a2 * a2 + a3 * a3); }
};

/// Unit-trace, Hermitian, positive-semidefinite complex matrix. Validated on
/// construction; immutable afterwards.
class DensityMatrix {
 public:
  explicit DensityMatrix(Matrix m, double tol = kPositivityTol);

  const Matrix& matrix() const { return m_; }
  Index dim() const { return m_.rows(); }

  /// Tr[rho^2], real.
  double purity() const;

 private:
  Matrix m_;
};

/// Operator on a system (x) environment space with the composite index (r, k)
/// flattened as r * dim_e + k, matching the Kronecker-product layout.
struct BipartiteOperator {
  Matrix matrix;
  Index dim_s = 0;
  Index dim_e = 0;
};

/// eta = (1/2)(identity + a1 sigma_x + a2 sigma_y + a3 sigma_z).
/// Rejects Bloch vectors outside the unit ball (the result would not be a
/// valid state).
DensityMatrix bloch_to_density(const BlochVector& a);

/// a_j = Re Tr[eta sigma_j]; requires dim 2.
BlochVector density_to_bloch(const DensityMatrix& eta);

Matrix kron(const Matrix& a, const Matrix& b);

/// (Tr_E X)_{rs} = sum_k X_{(r,k),(s,k)}.
Matrix partial_trace_env(const Matrix& x, Index dim_s, Index dim_e);
Matrix partial_trace_env(const BipartiteOperator& x);

/// U = exp(-i dt H) via Hermitian eigendecomposition of H; the result is
/// unitary to roundoff for any step size.
Matrix unitary_propagator(const Matrix& h, double dt);

/// Smallest eigenvalue of a Hermitian matrix.
double min_eigenvalue(const Matrix& x, double herm_tol = kHermitianTol);

}  // namespace nmq

#endif  // NMQ_CORE_HPP
