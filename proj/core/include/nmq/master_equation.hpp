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

#ifndef NMQ_MASTER_EQUATION_HPP
#define NMQ_MASTER_EQUATION_HPP

#include <string>
#include <vector>

#include "nmq/canonical.hpp"
#include "nmq/core.hpp"
#include "nmq/map_algebra.hpp"
#include "nmq/open_system.hpp"

namespace nmq {

inline constexpr double kDefaultFdStep = 1e-5;
inline constexpr double kDefaultRk4Dt = 1e-3;

//=========================================================================
// Time-local generator
//=========================================================================

/// Split of the total Hamiltonian into a system-local part H_O (system
/// dimension) and an interaction part H_I (total dimension), with
/// H_O (x) 1 + H_I equal to the total Hamiltonian.
struct HamiltonianSplit {
  Matrix local;
  Matrix interaction;
};

/// F_t(eta) = -i Tr_E[ H_I E^C_t(eta) ]. The environment part of the
/// generator is K_t = F_t + F_t^dag. If embedded_min_eig is non-null it
/// receives the positivity diagnostic of the embedded state, flagging
/// out-of-domain eta (the value is still computed).
Matrix f_operator(const TotalDynamics& td, const HamiltonianSplit& split,
                  double t, const DensityMatrix& eta,
                  double* embedded_min_eig = nullptr);

/// Full flow generator in A form at time t: the central finite difference
/// of the canonical map, d/dt' A^C_{(t'|t)} at t' = t. Includes the local
/// -i[H_O, .] part. Throws NumericalRefusal within kSingularSvThreshold of a
/// singular time.
AForm flow_generator_a(const TotalDynamics& td, double t,
                       double fd_step = kDefaultFdStep);

/// Snapshot of the master-equation generator at one time: the environment
/// superoperator K_t (flow generator minus -i[H_O, .]) in Hermitian form,
/// plus the local Hamiltonian it was split against.
struct GeneratorSample {
  double t = 0.0;
  BForm k_superop;
  Matrix h_local;
};

GeneratorSample generator_at(const TotalDynamics& td, double t,
                             double fd_step = kDefaultFdStep);

//=========================================================================
// Trajectories
//=========================================================================

/// Time series of states with per-row diagnostics. bloch is filled for
/// qubit states only. abort_reason is non-empty when an integration stopped
/// before reaching its requested end time (the rows up to the last good
/// state are kept).
struct Trajectory {
  std::vector<double> times;
  std::vector<Matrix> states;
  std::vector<BlochVector> bloch;
  std::vector<double> purity;
  std::vector<double> min_eig;
  std::string abort_reason;

  size_t size() const { return times.size(); }
};

/// Classic fixed-step RK4 on the non-Markovian master equation
/// d eta / dt = -i[H_O, eta] + K_t(eta), with the full generator obtained by
/// finite differences of the canonical map. A step that would cross a refused
/// singular time aborts with the last good state.
Trajectory integrate_nonmarkovian(const TotalDynamics& td,
                                  const DensityMatrix& eta0, double t_start,
                                  double t_end, double dt = kDefaultRk4Dt,
                                  double fd_step = kDefaultFdStep);

//=========================================================================
// Kossakowski-Lindblad dynamics
//=========================================================================

struct LindbladModel {
  Matrix h;
  std::vector<Matrix> l_ops;
};

/// -i[H, eta] + sum_a (1/2)(2 L_a eta L_a^dag - L_a^dag L_a eta
///                         - eta L_a^dag L_a). Traceless.
Matrix lindblad_rhs(const LindbladModel& m, const Matrix& eta);

/// Extract a Lindblad model from a near-identity completely positive map at
/// small time t: sqrt(lambda_0) C_0 ~ 1 + sqrt(t) L_0 fixes L_0 (and through
/// its anti-Hermitian part the rescaled Hamiltonian, L_0 - L_0^dag =
/// -i sqrt(t) H); L_a = sqrt(lambda_a / t) C_a for a > 0. Rejects maps too
/// far from identity (lambda_0 < 0.75 * dim).
LindbladModel lindblad_from_map(const BForm& b_t, double t);

Trajectory integrate_lindblad(const LindbladModel& m, const DensityMatrix& eta0,
                              double t_start, double t_end,
                              double dt = kDefaultRk4Dt);

//=========================================================================
// Collision model and short-time truncation
//=========================================================================

/// Repeated application of a single-collision map: eta -> B(eta), n times.
/// Rows are emitted at times t0 + k * period, k = 0..n.
Trajectory collision_simulate(const BForm& b_single, int n_collisions,
                              const DensityMatrix& eta0, double t0 = 0.0,
                              double period = 1.0);

/// gamma = (2/T) ln(1/cos T), the rate for which the collision shrink factor
/// cos(T)^{2N} equals exp(-gamma N T) identically. Requires 0 < T < pi/2.
double rescaled_rate(double interaction_time);

/// RK4 on the short-time truncated generator d eta/dt = (t - t0)(1 - 2 eta)
/// for a qubit; solution decays as exp(-(t - t0)^2) in each Bloch component,
/// with zero derivative at t0 (Zeno region).
Trajectory integrate_truncated(const DensityMatrix& eta0, double t_start,
                               double t_end, double dt = kDefaultRk4Dt);

}  // namespace nmq

#endif  // NMQ_MASTER_EQUATION_HPP
