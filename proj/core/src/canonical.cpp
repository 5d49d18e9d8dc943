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

#include "nmq/canonical.hpp"

#include <cmath>
#include <string>

namespace nmq {

namespace {

// Canonical maps composed from a near-singular inverse carry entries of
// magnitude up to 1/kSingularSvThreshold, so their exchanged form picks up
// roundoff asymmetry at that scale. Validate against the scale, then
// symmetrize; genuine Hermiticity-preservation failures still throw.
BForm hermitian_form_of(const AForm& a) {
  const Matrix raw = exchange_supermatrix_indices(a.matrix(), a.dim());
  const double scale = std::max(1.0, max_abs(raw));
  const double asymmetry = max_abs(Matrix(raw - raw.adjoint()));
  if (asymmetry > kHermitianTol * scale) {
    throw std::invalid_argument(
        "CanonicalMap: map is not Hermiticity-preserving (asymmetry " +
        std::to_string(asymmetry) + ")");
  }
  return BForm(a.dim(), 0.5 * (raw + Matrix(raw.adjoint())));
}

}  // namespace

CanonicalMap::CanonicalMap(AForm a, double t_from, double t_to,
                           const TotalDynamics* source, int inverse_rank,
                           double inverse_residual)
    : a_(std::move(a)),
      b_(hermitian_form_of(a_)),
      t_from_(t_from),
      t_to_(t_to),
      source_(source),
      inverse_rank_(inverse_rank),
      inverse_residual_(inverse_residual) {}

CanonicalMap canonical_map(const TotalDynamics& td, double t_from,
                           double t_to) {
  const AForm forward_from = reduced_dynamical_map_a(td, t_from);

  Eigen::JacobiSVD<Matrix> svd(forward_from.matrix());
  const double smallest_sv = svd.singularValues().minCoeff();
  if (smallest_sv < kSingularSvThreshold) {
    throw NumericalRefusal(
        "canonical_map: forward map at t=" + std::to_string(t_from) +
        " is near-singular (smallest singular value " +
        std::to_string(smallest_sv) +
        "); the compatibility domain has collapsed");
  }

  const PseudoInverse inverse = pseudo_inverse_a(forward_from);
  const double inverse_residual = max_abs_diff(
      inverse.map.matrix() * forward_from.matrix(),
      Matrix::Identity(forward_from.matrix().rows(), forward_from.matrix().cols()));

  const AForm forward_to = reduced_dynamical_map_a(td, t_to);
  return CanonicalMap(compose(forward_to, inverse.map), t_from, t_to, &td,
                      inverse.rank, inverse_residual);
}

CanonicalMap compose(const CanonicalMap& later, const CanonicalMap& earlier) {
  if (later.source() != earlier.source()) {
    throw std::invalid_argument(
        "compose(CanonicalMap): maps come from different dynamics");
  }
  if (std::abs(later.t_from() - earlier.t_to()) > 1e-12) {
    throw std::invalid_argument(
        "compose(CanonicalMap): time chain mismatch (" +
        std::to_string(earlier.t_to()) + " vs " +
        std::to_string(later.t_from()) + ")");
  }
  return CanonicalMap(compose(later.a(), earlier.a()), earlier.t_from(),
                      later.t_to(), later.source(),
                      std::min(later.inverse_rank(), earlier.inverse_rank()),
                      std::max(later.inverse_residual(),
                               earlier.inverse_residual()));
}

Matrix canonical_embedding_matrix(const TotalDynamics& td, double t,
                                  const Matrix& eta) {
  const CanonicalMap back = canonical_map(td, t, td.t0());
  const Matrix eta0 = back.apply(eta);
  const Matrix u = td.propagator(td.t0(), t);
  return u * kron(eta0, td.tau().matrix()) * u.adjoint();
}

EmbeddingResult canonical_embedding(const TotalDynamics& td, double t,
                                    const DensityMatrix& eta) {
  Matrix embedded = canonical_embedding_matrix(td, t, eta.matrix());
  // Hermitian by construction up to roundoff; symmetrize before the
  // positivity diagnostic.
  const Matrix herm = 0.5 * (embedded + Matrix(embedded.adjoint()));
  Eigen::SelfAdjointEigenSolver<Matrix> solver(herm, Eigen::EigenvaluesOnly);
  return EmbeddingResult{
      BipartiteOperator{std::move(embedded), td.dim_s(), td.dim_e()},
      solver.eigenvalues().minCoeff()};
}

double embedding_relocation_residual(const TotalDynamics& td, double t,
                                     double t_prime,
                                     const DensityMatrix& eta) {
  const Matrix direct = canonical_embedding_matrix(td, t, eta.matrix());

  const CanonicalMap hop = canonical_map(td, t, t_prime);
  const Matrix relocated =
      canonical_embedding_matrix(td, t_prime, hop.apply(eta.matrix()));
  const Matrix u = td.propagator(t_prime, t);
  return max_abs_diff(direct, u * relocated * u.adjoint());
}

}  // namespace nmq
