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

#include "nmq/open_system.hpp"

namespace nmq {

TotalDynamics::TotalDynamics(Matrix hamiltonian, double t0, DensityMatrix tau,
                             Index dim_s, Index dim_e,
                             std::optional<Matrix> local_hamiltonian)
    : h_(std::move(hamiltonian)),
      t0_(t0),
      tau_(std::move(tau)),
      dim_s_(dim_s),
      dim_e_(dim_e) {
  if (dim_s_ <= 0 || dim_e_ <= 0) {
    throw std::invalid_argument("TotalDynamics: dimensions must be positive");
  }
  if (h_.rows() != dim_total() || h_.cols() != dim_total()) {
    throw std::invalid_argument(
        "TotalDynamics: Hamiltonian must act on the total space");
  }
  if (!is_hermitian(h_)) {
    throw std::invalid_argument("TotalDynamics: Hamiltonian not Hermitian");
  }
  if (tau_.dim() != dim_e_) {
    throw std::invalid_argument(
        "TotalDynamics: environment state dimension mismatch");
  }
  if (local_hamiltonian.has_value()) {
    h_local_ = std::move(*local_hamiltonian);
    if (h_local_.rows() != dim_s_ || h_local_.cols() != dim_s_) {
      throw std::invalid_argument(
          "TotalDynamics: local Hamiltonian must act on the system space");
    }
    if (!is_hermitian(h_local_)) {
      throw std::invalid_argument(
          "TotalDynamics: local Hamiltonian not Hermitian");
    }
  } else {
    h_local_ = Matrix::Zero(dim_s_, dim_s_);
  }

  Eigen::SelfAdjointEigenSolver<Matrix> solver(h_);
  eigenvalues_ = solver.eigenvalues();
  eigenvectors_ = solver.eigenvectors();
}

Matrix TotalDynamics::interaction_hamiltonian() const {
  return h_ - kron(h_local_, Matrix::Identity(dim_e_, dim_e_));
}

Matrix TotalDynamics::propagator(double t_i, double t_f) const {
  const double dt = t_f - t_i;
  Vector phases(eigenvalues_.size());
  for (Index i = 0; i < eigenvalues_.size(); ++i) {
    phases(i) = std::exp(Complex(0.0, -dt * eigenvalues_(i)));
  }
  return eigenvectors_ * phases.asDiagonal() * eigenvectors_.adjoint();
}

EmbeddingResult product_embed(const DensityMatrix& eta,
                              const DensityMatrix& tau) {
  BipartiteOperator state{kron(eta.matrix(), tau.matrix()), eta.dim(),
                          tau.dim()};
  const double min_eig = min_eigenvalue(state.matrix);
  return EmbeddingResult{std::move(state), min_eig};
}

BipartiteOperator evolve_total(const TotalDynamics& td,
                               const BipartiteOperator& rho, double t_i,
                               double t_f) {
  if (rho.matrix.rows() != td.dim_total() ||
      rho.matrix.cols() != td.dim_total() || rho.dim_s != td.dim_s() ||
      rho.dim_e != td.dim_e()) {
    throw std::invalid_argument("evolve_total: dimension mismatch");
  }
  const Matrix u = td.propagator(t_i, t_f);
  return BipartiteOperator{u * rho.matrix * u.adjoint(), rho.dim_s, rho.dim_e};
}

AForm reduced_dynamical_map_a(const TotalDynamics& td, double t_f) {
  const Index d = td.dim_s();
  const Matrix u = td.propagator(td.t0(), t_f);
  const Matrix& tau = td.tau().matrix();

  Matrix a(d * d, d * d);
  for (Index r = 0; r < d; ++r) {
    for (Index s = 0; s < d; ++s) {
      Matrix e = Matrix::Zero(d, d);
      e(r, s) = 1.0;
      const Matrix evolved = u * kron(e, tau) * u.adjoint();
      a.col(r * d + s) =
          vec_row_major(partial_trace_env(evolved, d, td.dim_e()));
    }
  }
  return AForm(d, std::move(a));
}

BForm reduced_dynamical_map(const TotalDynamics& td, double t_f) {
  return a_to_b(reduced_dynamical_map_a(td, t_f));
}

}  // namespace nmq
