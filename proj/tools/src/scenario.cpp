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

#include "nmq/cli/scenario.hpp"

#include <fstream>

#include "nmq/cli/map_io.hpp"

namespace nmq::cli {

using nlohmann::json;

Matrix swap_interaction_hamiltonian() {
  Matrix h = Matrix::Zero(4, 4);
  for (int j = 1; j <= 3; ++j) {
    h += 0.5 * kron(pauli(j), pauli(j));
  }
  return h;
}

TotalDynamics ScenarioConfig::make_dynamics() const {
  std::optional<Matrix> local;
  if (h_local.size() > 0 && max_abs(h_local) > 0.0) local = h_local;
  return TotalDynamics(hamiltonian, t0, DensityMatrix(tau), dim_s, dim_e,
                       local);
}

DensityMatrix ScenarioConfig::initial_state() const {
  return bloch_to_density(a0);
}

namespace {

ScenarioKind parse_kind(const std::string& name) {
  if (name == "swap-qubit") return ScenarioKind::kSwapQubit;
  if (name == "collision") return ScenarioKind::kCollision;
  if (name == "lindblad") return ScenarioKind::kLindblad;
  if (name == "truncated") return ScenarioKind::kTruncated;
  if (name == "custom") return ScenarioKind::kCustom;
  throw std::invalid_argument("unknown scenario \"" + name + "\"");
}

double require_number(const json& j, const char* key, double fallback,
                      bool present_required = false) {
  if (!j.contains(key)) {
    if (present_required) {
      throw std::invalid_argument(std::string("scenario JSON: missing \"") +
                                  key + "\"");
    }
    return fallback;
  }
  if (!j[key].is_number()) {
    throw std::invalid_argument(std::string("scenario JSON: \"") + key +
                                "\" must be a number");
  }
  return j[key].get<double>();
}

}  // namespace

ScenarioConfig scenario_from_json(const json& j) {
  if (!j.is_object()) {
    throw std::invalid_argument("scenario JSON must be an object");
  }
  ScenarioConfig c;
  c.kind = parse_kind(j.value("scenario", std::string("swap-qubit")));

  if (j.contains("method")) {
    const std::string m = j["method"].get<std::string>();
    if (m == "exact") {
      c.method = RunMethod::kExact;
    } else if (m == "master-equation") {
      c.method = RunMethod::kMasterEquation;
    } else {
      throw std::invalid_argument("scenario JSON: method must be \"exact\" or "
                                  "\"master-equation\"");
    }
  }

  if (j.contains("dS")) c.dim_s = j["dS"].get<Index>();
  if (j.contains("dE")) c.dim_e = j["dE"].get<Index>();
  if (c.dim_s <= 0 || c.dim_e <= 0) {
    throw std::invalid_argument("scenario JSON: dS and dE must be positive");
  }

  const bool is_custom = c.kind == ScenarioKind::kCustom;
  if (j.contains("hamiltonian")) {
    c.hamiltonian = entries_to_matrix(j["hamiltonian"], c.dim_s * c.dim_e,
                                      c.dim_s * c.dim_e, "hamiltonian");
  } else if (is_custom) {
    throw std::invalid_argument(
        "scenario JSON: custom scenario requires \"hamiltonian\"");
  } else {
    if (c.dim_s != 2 || c.dim_e != 2) {
      throw std::invalid_argument(
          "scenario JSON: default Hamiltonian is defined for dS = dE = 2");
    }
    c.hamiltonian = swap_interaction_hamiltonian();
  }

  if (j.contains("tau")) {
    c.tau = entries_to_matrix(j["tau"], c.dim_e, c.dim_e, "tau");
  } else {
    c.tau = Matrix::Identity(c.dim_e, c.dim_e) /
            static_cast<double>(c.dim_e);
  }

  if (j.contains("h_local")) {
    c.h_local = entries_to_matrix(j["h_local"], c.dim_s, c.dim_s, "h_local");
  } else {
    c.h_local = Matrix::Zero(c.dim_s, c.dim_s);
  }

  c.t0 = require_number(j, "t0", c.t0);
  c.t1 = require_number(j, "t1", c.t1);
  c.dt = require_number(j, "dt", c.dt);

  if (j.contains("a0")) {
    const json& a = j["a0"];
    if (!a.is_array() || a.size() != 3) {
      throw std::invalid_argument("scenario JSON: a0 must be [a1, a2, a3]");
    }
    c.a0 = BlochVector{a[0].get<double>(), a[1].get<double>(),
                       a[2].get<double>()};
  }

  c.collision_time = require_number(j, "T", c.collision_time,
                                    c.kind == ScenarioKind::kCollision);
  if (j.contains("N")) {
    if (!j["N"].is_number_integer() || j["N"].get<int>() < 0) {
      throw std::invalid_argument("scenario JSON: N must be a non-negative integer");
    }
    c.collision_count = j["N"].get<int>();
  } else if (c.kind == ScenarioKind::kCollision) {
    throw std::invalid_argument("scenario JSON: collision scenario requires \"N\"");
  }
  c.gamma = require_number(j, "gamma", c.gamma,
                           c.kind == ScenarioKind::kLindblad);

  if (j.contains("out")) c.out_path = j["out"].get<std::string>();

  if (c.kind != ScenarioKind::kCollision && !(c.t1 > c.t0)) {
    throw std::invalid_argument("scenario JSON: time grid must have positive length");
  }
  if (!(c.dt > 0.0)) {
    throw std::invalid_argument("scenario JSON: dt must be positive");
  }
  return c;
}

ScenarioConfig load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open scenario file: " + path);
  }
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& err) {
    throw std::invalid_argument("scenario JSON parse error: " +
                                std::string(err.what()));
  }
  return scenario_from_json(j);
}

}  // namespace nmq::cli
