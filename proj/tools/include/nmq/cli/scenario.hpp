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

#ifndef NMQ_CLI_SCENARIO_HPP
#define NMQ_CLI_SCENARIO_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "nmq/core.hpp"
#include "nmq/open_system.hpp"

namespace nmq::cli {

enum class ScenarioKind { kSwapQubit, kCollision, kLindblad, kTruncated, kCustom };

enum class RunMethod { kExact, kMasterEquation };

/// Parsed scenario configuration. Scenario JSON fields:
///   scenario:    "swap-qubit" | "collision" | "lindblad" | "truncated" |
///                "custom"
///   hamiltonian: row-major [re, im] pairs, dS*dE square (custom; optional
///                for swap-qubit/collision, which default to the partial-swap
///                interaction)
///   tau:         environment state entries (defaults to maximally mixed)
///   h_local:     optional system-local Hamiltonian for the master-equation
///                split (defaults to zero)
///   t0, t1, dt:  time grid
///   a0:          initial Bloch vector [a1, a2, a3]
///   T, N:        collision interaction time and count
///   gamma:       decay rate for the lindblad scenario
///   method:      "exact" (evolve-and-trace; defined at all times) or
///                "master-equation" (finite-difference generator + RK4;
///                refuses to cross singular times)
///   out:         output CSV path
struct ScenarioConfig {
  ScenarioKind kind = ScenarioKind::kSwapQubit;
  RunMethod method = RunMethod::kExact;

  Matrix hamiltonian;   // total space
  Matrix tau;           // environment
  Matrix h_local;       // system space; zero if absent
  Index dim_s = 2;
  Index dim_e = 2;

  double t0 = 0.0;
  double t1 = 1.0;
  double dt = 1e-3;

  BlochVector a0{1.0, 0.0, 0.0};

  double collision_time = 0.3;
  int collision_count = 10;
  double gamma = 1.0;

  std::string out_path = "trajectory.csv";

  TotalDynamics make_dynamics() const;
  DensityMatrix initial_state() const;
};

/// The partial-swap interaction (1/2) sum_j sigma_j (x) sigma_j.
Matrix swap_interaction_hamiltonian();

ScenarioConfig scenario_from_json(const nlohmann::json& j);
ScenarioConfig load_scenario(const std::string& path);

}  // namespace nmq::cli

#endif  // NMQ_CLI_SCENARIO_HPP
