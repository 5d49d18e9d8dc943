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

#ifndef NMQ_MAP_ALGEBRA_HPP
#define NMQ_MAP_ALGEBRA_HPP

#include <cstdint>
#include <vector>

#include "nmq/core.hpp"

namespace nmq {

//=========================================================================
// Supermatrix forms
//
// Two index conventions for the same linear map on d x d matrices:
//
//   A form: row (r', s') -> r'*d + s', column (r, s) -> r*d + s.
//           Acts by matrix-vector product on the row-major vectorized state.
//   B form: row (r', r)  -> r'*d + r,  column (s', s) -> s'*d + s.
//           Hermiticity preservation of the map becomes literal matrix
//           Hermiticity; eigenvalues are the Choi-type spectrum.
//
// The two are related by an entrywise index exchange (an involution).
//=========================================================================

/// Supermatrix acting on vectorized density matrices:
/// rho_out = unvec(matrix * vec(rho_in)).
class AForm {
 public:
  AForm(Index dim, Matrix entries);
  static AForm identity(Index dim);

  Index dim() const { return dim_; }
  const Matrix& matrix() const { return m_; }

  Matrix apply(const Matrix& rho) const;
  Matrix apply(const DensityMatrix& rho) const { return apply(rho.matrix()); }

 private:
  Index dim_;
  Matrix m_;
};

/// Hermitian-form supermatrix: rho_out(r', s') = sum B[(r'r),(s's)] rho(r, s).
/// The stored matrix must be Hermitian within tolerance (it always is for
/// maps that preserve Hermiticity).
class BForm {
 public:
  BForm(Index dim, Matrix entries, double herm_tol = kHermitianTol);
  static BForm identity(Index dim);

  Index dim() const { return dim_; }
  const Matrix& matrix() const { return m_; }

  Matrix apply(const Matrix& rho) const;
  Matrix apply(const DensityMatrix& rho) const { return apply(rho.matrix()); }

 private:
  Index dim_;
  Matrix m_;
};

/// Index exchange B[(r'r),(s's)] = A[(r's'),(rs)] and back. Entrywise
/// permutations, exact, mutually inverse.
BForm a_to_b(const AForm& a);
AForm b_to_a(const BForm& b);

/// The raw entrywise exchange (r', s', r, s) -> (r', r, s', s) on a
/// dim^2 x dim^2 matrix; its own inverse. For Hermiticity-preserving maps
/// with large entries (composed inverses near singular times) the exchanged
/// matrix picks up roundoff asymmetry at the entry scale, so callers that
/// need a BForm symmetrize against that scale instead of the absolute
/// tolerance a_to_b applies.
Matrix exchange_supermatrix_indices(const Matrix& m, Index dim);

//=========================================================================
// Spectral form
//=========================================================================

/// Real eigenvalues (sorted descending) with trace-orthonormal eigenmatrices:
/// the map acts as rho -> sum_a lambda_a C_a rho C_a^dag.
///
/// Individual eigenmatrices of a degenerate eigenvalue are a gauge choice
/// (deterministic here, but not contractual); only the reconstructed map is.
struct MapSpectrum {
  std::vector<double> lambdas;
  std::vector<Matrix> c_matrices;
};

MapSpectrum spectral_decompose(const BForm& b, double herm_tol = kHermitianTol);

/// Rebuild the B form from a spectrum: B = sum_a lambda_a vec(C_a) vec(C_a)^dag.
BForm spectrum_to_b(const MapSpectrum& s);

/// All Choi-type eigenvalues >= -tol.
bool is_completely_positive(const BForm& b, double tol = kPositivityTol);

//=========================================================================
// Property checks, composition, inversion
//=========================================================================

struct MapPropertyReport {
  bool trace_preserving = false;
  bool hermiticity_preserving = false;
  bool positive_on_samples = false;
  double trace_residual = 0.0;        // max | sum_r' A[(r'r'),(rs)] - delta_rs |
  double hermiticity_residual = 0.0;  // max | A[(s'r'),(sr)] - conj A[(r's'),(rs)] |
  double worst_min_eigenvalue = 0.0;  // over the sampled output states
};

/// Trace and Hermiticity preservation checked algebraically; positivity by
/// applying the map to n_samples random pure and mixed states (deciding
/// positivity of a map is not a spectrum test). Deterministic for a fixed
/// seed.
MapPropertyReport check_a_properties(const AForm& a, int n_samples = 500,
                                     std::uint64_t seed = 0,
                                     double tol = kPositivityTol);

/// Composition a2 after a1; plain matrix multiplication in the A form.
AForm compose(const AForm& a2, const AForm& a1);

struct PseudoInverse {
  AForm map;
  int rank = 0;             // singular values kept
  double largest_sv = 0.0;
  double smallest_kept_sv = 0.0;
  double cutoff = 0.0;      // threshold actually applied
};

/// Moore-Penrose pseudo-inverse of the supermatrix. Singular values below
/// sv_cutoff are zeroed; a negative sv_cutoff selects the default relative
/// cutoff 1e-12 * (largest singular value). Rank deficiency is reported,
/// never fatal.
PseudoInverse pseudo_inverse_a(const AForm& a, double sv_cutoff = -1.0);

/// True iff rho has a valid preimage under the forward map: the pseudo-inverse
/// preimage must be a density matrix (min eigenvalue >= -tol) and must map
/// back onto rho within tol.
bool in_compatibility_domain(const AForm& forward, const DensityMatrix& rho,
                             double tol = kPositivityTol);

//=========================================================================
// Qubit affine form
//=========================================================================

/// a -> linear * a + translation on the Bloch ball.
struct AffineQubitMap {
  Eigen::Matrix3d linear = Eigen::Matrix3d::Identity();
  Eigen::Vector3d translation = Eigen::Vector3d::Zero();
};

/// The trace-preserving qubit map sending (1/2)(1 + a.sigma) to
/// (1/2)(1 + (linear*a + translation).sigma).
AForm affine_to_a(const AffineQubitMap& m);

/// Inverse of affine_to_a; requires dim 2 (and a trace-preserving map for the
/// result to be faithful).
AffineQubitMap affine_from_a(const AForm& a);

}  // namespace nmq

#endif  // NMQ_MAP_ALGEBRA_HPP
