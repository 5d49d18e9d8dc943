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

#include "nmq/master_equation.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

namespace nmq {

namespace {

void append_row(Trajectory& traj, double t, const Matrix& state) {
  traj.times.push_back(t);
  traj.states.push_back(state);
  if (state.rows() == 2) {
    BlochVector a;
    a.a1 = (state * sigma_x()).trace().real();
    a.a2 = (state * sigma_y()).trace().real();
    a.a3 = (state * sigma_z()).trace().real();
    traj.bloch.push_back(a);
  }
  traj.purity.push_back((state * state).trace().real());
  const Matrix herm = 0.5 * (state + Matrix(state.adjoint()));
  Eigen::SelfAdjointEigenSolver<Matrix> solver(herm, Eigen::EigenvaluesOnly);
  traj.min_eig.push_back(solver.eigenvalues().minCoeff());
}

// Fixed-step RK4 over matrix-valued states. The final step is shortened to
// land exactly on t_end. A NumericalRefusal from the right-hand side stops
// the integration; rows up to the last completed step are kept.
Trajectory rk4_integrate(const Matrix& y0, double t_start, double t_end,
                         double dt,
                         const std::function<Matrix(double, const Matrix&)>& rhs) {
  if (dt <= 0.0) {
    throw std::invalid_argument("rk4_integrate: dt must be positive");
  }
  if (t_end < t_start) {
    throw std::invalid_argument("rk4_integrate: t_end before t_start");
  }

  Trajectory traj;
  Matrix y = y0;
  double t = t_start;
  append_row(traj, t, y);

  while (t < t_end - 1e-12 * std::max(1.0, std::abs(t_end))) {
    const double h = std::min(dt, t_end - t);
    try {
      const Matrix k1 = rhs(t, y);
      const Matrix k2 = rhs(t + 0.5 * h, Matrix(y + 0.5 * h * k1));
      const Matrix k3 = rhs(t + 0.5 * h, Matrix(y + 0.5 * h * k2));
      const Matrix k4 = rhs(t + h, Matrix(y + h * k3));
      y += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    } catch (const NumericalRefusal& refusal) {
      traj.abort_reason = refusal.what();
      return traj;
    }
    t += h;
    append_row(traj, t, y);
  }
  return traj;
}

// -i[H, .] as an A-form supermatrix for row-major vectorization:
// vec(H X - X H) = (H (x) 1 - 1 (x) H^T) vec(X).
Matrix commutator_superop(const Matrix& h) {
  const Index d = h.rows();
  const Matrix id = Matrix::Identity(d, d);
  return Complex(0.0, -1.0) * (kron(h, id) - kron(id, Matrix(h.transpose())));
}

}  // namespace

Matrix f_operator(const TotalDynamics& td, const HamiltonianSplit& split,
                  double t, const DensityMatrix& eta,
                  double* embedded_min_eig) {
  if (split.local.rows() != td.dim_s() || split.local.cols() != td.dim_s()) {
    throw std::invalid_argument("f_operator: local part must act on the system");
  }
  const Matrix total = kron(split.local, Matrix::Identity(td.dim_e(), td.dim_e())) +
                       split.interaction;
  if (max_abs_diff(total, td.hamiltonian()) > 1e-12) {
    throw std::invalid_argument(
        "f_operator: split does not sum to the total Hamiltonian");
  }

  const Matrix embedded = canonical_embedding_matrix(td, t, eta.matrix());
  if (embedded_min_eig != nullptr) {
    const Matrix herm = 0.5 * (embedded + Matrix(embedded.adjoint()));
    Eigen::SelfAdjointEigenSolver<Matrix> solver(herm, Eigen::EigenvaluesOnly);
    *embedded_min_eig = solver.eigenvalues().minCoeff();
  }
  return Complex(0.0, -1.0) *
         partial_trace_env(Matrix(split.interaction * embedded), td.dim_s(),
                           td.dim_e());
}

AForm flow_generator_a(const TotalDynamics& td, double t, double fd_step) {
  if (fd_step <= 0.0) {
    throw std::invalid_argument("flow_generator_a: fd_step must be positive");
  }
  const AForm forward = reduced_dynamical_map_a(td, t);
  Eigen::JacobiSVD<Matrix> svd(forward.matrix());
  const double smallest_sv = svd.singularValues().minCoeff();
  if (smallest_sv < kSingularSvThreshold) {
    throw NumericalRefusal(
        "flow_generator_a: forward map at t=" + std::to_string(t) +
        " is near-singular (smallest singular value " +
        std::to_string(smallest_sv) + ")");
  }
  const PseudoInverse inverse = pseudo_inverse_a(forward);

  const AForm plus = reduced_dynamical_map_a(td, t + fd_step);
  const AForm minus = reduced_dynamical_map_a(td, t - fd_step);
  // Difference before multiplying by the (possibly large) inverse keeps the
  // cancellation in the well-conditioned factor.
  const Matrix diff = (plus.matrix() - minus.matrix()) / (2.0 * fd_step);
  return AForm(td.dim_s(), diff * inverse.map.matrix());
}

GeneratorSample generator_at(const TotalDynamics& td, double t,
                             double fd_step) {
  const AForm full = flow_generator_a(td, t, fd_step);
  const Matrix k_a = full.matrix() - commutator_superop(td.local_hamiltonian());
  // Exchange to the Hermitian form and symmetrize away finite-difference
  // roundoff before validation.
  const Matrix k_raw = exchange_supermatrix_indices(k_a, td.dim_s());
  const Matrix k_herm = 0.5 * (k_raw + Matrix(k_raw.adjoint()));
  return GeneratorSample{t, BForm(td.dim_s(), k_herm), td.local_hamiltonian()};
}

Trajectory integrate_nonmarkovian(const TotalDynamics& td,
                                  const DensityMatrix& eta0, double t_start,
                                  double t_end, double dt, double fd_step) {
  // The generator is a supermatrix independent of the state, so each stage
  // time needs one finite-difference build; k2 and k3 share one.
  double cached_t = std::numeric_limits<double>::quiet_NaN();
  Matrix cached_gen;
  auto rhs = [&](double t, const Matrix& y) -> Matrix {
    if (!(t == cached_t)) {
      cached_gen = flow_generator_a(td, t, fd_step).matrix();
      cached_t = t;
    }
    const Index d = td.dim_s();
    return unvec_row_major(Vector(cached_gen * vec_row_major(y)), d, d);
  };
  return rk4_integrate(eta0.matrix(), t_start, t_end, dt, rhs);
}

Matrix lindblad_rhs(const LindbladModel& m, const Matrix& eta) {
  if (eta.rows() != eta.cols()) {
    throw std::invalid_argument("lindblad_rhs: state must be square");
  }
  Matrix out = Matrix::Zero(eta.rows(), eta.cols());
  if (m.h.size() > 0) {
    if (m.h.rows() != eta.rows() || m.h.cols() != eta.cols()) {
      throw std::invalid_argument("lindblad_rhs: Hamiltonian shape mismatch");
    }
    out += Complex(0.0, -1.0) * (m.h * eta - eta * m.h);
  }
  for (const Matrix& l : m.l_ops) {
    if (l.rows() != eta.rows() || l.cols() != eta.cols()) {
      throw std::invalid_argument("lindblad_rhs: operator shape mismatch");
    }
    const Matrix ldag = l.adjoint();
    const Matrix ldagl = ldag * l;
    out += l * eta * ldag - 0.5 * (ldagl * eta + eta * ldagl);
  }
  return out;
}

LindbladModel lindblad_from_map(const BForm& b_t, double t) {
  if (t <= 0.0) {
    throw std::invalid_argument("lindblad_from_map: t must be positive");
  }
  const Index d = b_t.dim();
  const MapSpectrum spec = spectral_decompose(b_t);

  const double lambda0 = spec.lambdas.front();
  if (lambda0 < 0.75 * static_cast<double>(d)) {
    throw NumericalRefusal(
        "lindblad_from_map: map too far from identity (lambda_0 = " +
        std::to_string(lambda0) + ")");
  }

  const double sqrt_t = std::sqrt(t);
  LindbladModel model;
  model.l_ops.reserve(spec.lambdas.size());

  const Matrix l0 =
      (std::sqrt(lambda0) * spec.c_matrices.front() - Matrix::Identity(d, d)) /
      sqrt_t;
  model.l_ops.push_back(l0);
  // L_0 - L_0^dag = -i sqrt(t) H defines the rescaled local Hamiltonian.
  model.h = Complex(0.0, 1.0) * (l0 - Matrix(l0.adjoint())) / sqrt_t;

  for (size_t a = 1; a < spec.lambdas.size(); ++a) {
    double lambda = spec.lambdas[a];
    if (lambda < -kPositivityTol) {
      throw std::invalid_argument(
          "lindblad_from_map: map is not completely positive (lambda = " +
          std::to_string(lambda) + ")");
    }
    lambda = std::max(lambda, 0.0);
    model.l_ops.push_back(std::sqrt(lambda / t) * spec.c_matrices[a]);
  }
  return model;
}

Trajectory integrate_lindblad(const LindbladModel& m, const DensityMatrix& eta0,
                              double t_start, double t_end, double dt) {
  return rk4_integrate(eta0.matrix(), t_start, t_end, dt,
                       [&m](double, const Matrix& y) { return lindblad_rhs(m, y); });
}

Trajectory collision_simulate(const BForm& b_single, int n_collisions,
                              const DensityMatrix& eta0, double t0,
                              double period) {
  if (n_collisions < 0) {
    throw std::invalid_argument("collision_simulate: negative collision count");
  }
  // Repeated action is cheapest through the A form.
  const AForm a = b_to_a(b_single);

  Trajectory traj;
  Matrix state = eta0.matrix();
  append_row(traj, t0, state);
  for (int k = 1; k <= n_collisions; ++k) {
    state = a.apply(state);
    append_row(traj, t0 + period * static_cast<double>(k), state);
  }
  return traj;
}

double rescaled_rate(double interaction_time) {
  if (!(interaction_time > 0.0) ||
      !(interaction_time < std::numbers::pi / 2.0)) {
    throw std::domain_error(
        "rescaled_rate: interaction time must lie in (0, pi/2)");
  }
  return (2.0 / interaction_time) * std::log(1.0 / std::cos(interaction_time));
}

Trajectory integrate_truncated(const DensityMatrix& eta0, double t_start,
                               double t_end, double dt) {
  if (eta0.dim() != 2) {
    throw std::invalid_argument("integrate_truncated: requires a qubit state");
  }
  const double t0 = t_start;
  auto rhs = [t0](double t, const Matrix& y) -> Matrix {
    return (t - t0) * (identity2() - 2.0 * y);
  };
  return rk4_integrate(eta0.matrix(), t_start, t_end, dt, rhs);
}

}  // namespace nmq
