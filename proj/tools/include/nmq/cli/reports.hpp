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

#ifndef NMQ_CLI_REPORTS_HPP
#define NMQ_CLI_REPORTS_HPP

#include <cstdint>
#include <iosfwd>
#include <string>

#include <json.hpp>

#include "nmq/cli/map_io.hpp"
#include "nmq/cli/scenario.hpp"
#include "nmq/master_equation.hpp"

namespace nmq::cli {

/// Full-precision decimal formatting (17 significant digits), used everywhere
/// a number reaches a file so reruns are byte-identical.
std::string format_double(double x);

/// Trajectory CSV: header "t,a1,a2,a3,purity,min_eig", one row per step.
/// Non-qubit states emit zeros for the Bloch columns.
void write_trajectory_csv(const std::string& path, const Trajectory& traj);

struct RunSummary {
  double final_bloch_norm = 0.0;
  double max_trace_error = 0.0;
  double min_eigenvalue_seen = 0.0;
  std::string aborted;  // non-empty when integration stopped early
};

RunSummary summarize(const Trajectory& traj);
Trajectory run_scenario(const ScenarioConfig& config);

/// Map analysis: algebraic trace/Hermiticity checks, sampled positivity,
/// Choi-type spectrum, complete-positivity verdict and pseudo-inverse rank.
nlohmann::json analyze_map(const AnyMap& map, int n_samples,
                           std::uint64_t seed);
void print_analysis(std::ostream& os, const nlohmann::json& report);

/// Canonical-map report between two times: spectrum, CP verdict, group-law
/// residual through a seeded random intermediate time, and a compatibility-
/// domain radius estimate at t_from (qubit maps only).
nlohmann::json canonical_report(const ScenarioConfig& config, double t_from,
                                double t_to, std::uint64_t seed);
void print_canonical(std::ostream& os, const nlohmann::json& report);

}  // namespace nmq::cli

#endif  // NMQ_CLI_REPORTS_HPP
