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

#ifndef NMQ_CANONICAL_HPP
#define NMQ_CANONICAL_HPP

#include "nmq/core.hpp"
#include "nmq/map_algebra.hpp"
#include "nmq/open_system.hpp"

namespace nmq {

/// canonical_map refuses to invert a forward map whose smallest singular
/// value falls below this; at such times the compatibility domain has
/// effectively collapsed.
inline constexpr double kSingularSvThreshold = 1e-6;

/// Dynamical map between two arbitrary times, built as forward-from-t0
/// composed with the pseudo-inverse back to t0. Trace- and Hermiticity-
/// preserving always; completely positive only in special cases (t_from = t0,
/// or purely unitary reduced dynamics). These maps compose as a one-parameter
/// group, so both forms are kept: the A form because group composition is
/// matrix multiplication, the B form for spectra.
class CanonicalMap {
 public:
  CanonicalMap(AForm a, double t_from, double t_to, const TotalDynamics* source,
               int inverse_rank, double inverse_residual);

  const AForm& a() const { return a_; }
  const BForm& b() const { return b_; }
  double t_from() const { return t_from_; }
  double t_to() const { return t_to_; }
  const TotalDynamics* source() const { return source_; }

  /// Numerical rank of the inverted forward map (== dim^2 when full rank).
  int inverse_rank() const { return inverse_rank_; }
  /// max-abs residual of pinv(A_fwd) * A_fwd - identity; large values flag
  /// rank deficiency.
  double inverse_residual() const { return inverse_residual_; }

  Matrix apply(const Matrix& eta) const { return a_.apply(eta); }
  Matrix apply(const DensityMatrix& eta) const { return a_.apply(eta); }

 private:
  AForm a_;
  BForm b_;
  double t_from_;
  double t_to_;
  const TotalDynamics* source_;
  int inverse_rank_;
  double inverse_residual_;
};

/// B^C_{(t_to | t_from)} = B_{(t_to | t0)} after pinv(B_{(t_from | t0)}).
/// Throws NumericalRefusal when the forward map at t_from is within
/// kSingularSvThreshold of singular.
CanonicalMap canonical_map(const TotalDynamics& td, double t_from, double t_to);

/// Group composition; requires earlier.t_to == later.t_from and the same
/// source dynamics.
CanonicalMap compose(const CanonicalMap& later, const CanonicalMap& earlier);

/// E^C_t(eta) = U_{(t|t0)} [ (B^C_{(t0|t)} eta) (x) tau ] U^dag — the total
/// state consistent with reduced state eta at time t and the given history.
/// Hermitian and unit-trace always; positive exactly on the compatibility
/// domain (min_eig reports violations).
EmbeddingResult canonical_embedding(const TotalDynamics& td, double t,
                                    const DensityMatrix& eta);

/// Linear-operator version of the embedding, defined for any matrix argument
/// (used for relocation and master-equation machinery).
Matrix canonical_embedding_matrix(const TotalDynamics& td, double t,
                                  const Matrix& eta);

/// max-abs difference between E^C_t(eta) and the same embedding relocated
/// through t_prime: U_{(t|t')} E^C_{t'}( B^C_{(t'|t)} eta ) U^dag.
/// Identically zero in exact arithmetic for any valid embedding time.
double embedding_relocation_residual(const TotalDynamics& td, double t,
                                     double t_prime, const DensityMatrix& eta);

}  // namespace nmq

#endif  // NMQ_CANONICAL_HPP
