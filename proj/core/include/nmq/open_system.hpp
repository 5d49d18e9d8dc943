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

#ifndef NMQ_OPEN_SYSTEM_HPP
#define NMQ_OPEN_SYSTEM_HPP

#include <optional>

#include "nmq/core.hpp"
#include "nmq/map_algebra.hpp"

namespace nmq {

/// A closed system-environment pair: constant total Hamiltonian H, initial
/// time t0, and initial environment state tau. Everything downstream (reduced
/// maps, canonical maps, embeddings, generators) is derived from one of these.
///
/// Immutable after construction; the Hamiltonian eigendecomposition is cached
/// so propagators at many times are cheap.
class TotalDynamics {
 public:
  /// local_hamiltonian is the system part H_O (dim_s x dim_s) used by the
  /// master-equation split H = H_O (x) 1 + H_I. It defaults to zero, which
  /// treats the whole Hamiltonian as interaction.
  TotalDynamics(Matrix hamiltonian, double t0, DensityMatrix tau, Index dim_s,
                Index dim_e, std::optional<Matrix> local_hamiltonian = {});

  Index dim_s() const { return dim_s_; }
  Index dim_e() const { return dim_e_; }
  Index dim_total() const { return dim_s_ * dim_e_; }
  double t0() const { return t0_; }
  const Matrix& hamiltonian() const { return h_; }
  const DensityMatrix& tau() const { return tau_; }

  const Matrix& local_hamiltonian() const { return h_local_; }
  /// H_I = H - H_O (x) 1_E.
  Matrix interaction_hamiltonian() const;

  /// U_{(t_f | t_i)} = exp(-i (t_f - t_i) H); backward intervals allowed.
  Matrix propagator(double t_i, double t_f) const;

 private:
  Matrix h_;
  double t0_;
  DensityMatrix tau_;
  Index dim_s_;
  Index dim_e_;
  Matrix h_local_;
  // cached eigendecomposition of H
  Eigen::VectorXd eigenvalues_;
  Matrix eigenvectors_;
};

/// A total-space state produced by an embedding, with its smallest eigenvalue
/// as positivity diagnostic: embeddings of states outside the compatibility
/// domain are Hermitian and unit-trace but not positive.
struct EmbeddingResult {
  BipartiteOperator state;
  double min_eig = 0.0;
};

/// eta (x) tau; completely positive, min_eig always >= -tol.
EmbeddingResult product_embed(const DensityMatrix& eta,
                              const DensityMatrix& tau);

/// U_{(t_f|t_i)} rho U^dag.
BipartiteOperator evolve_total(const TotalDynamics& td,
                               const BipartiteOperator& rho, double t_i,
                               double t_f);

/// The reduced dynamical map eta(t0) -> Tr_E[ U (eta (x) tau) U^dag ] in
/// A form, built by tomography over the d^2 matrix units of the system space
/// (the construction is linear, so basis elements need not be states).
AForm reduced_dynamical_map_a(const TotalDynamics& td, double t_f);

/// Same map in Hermitian (B) form. Completely positive for every t_f, since
/// the initial total state is a product.
BForm reduced_dynamical_map(const TotalDynamics& td, double t_f);

}  // namespace nmq

#endif  // NMQ_OPEN_SYSTEM_HPP
