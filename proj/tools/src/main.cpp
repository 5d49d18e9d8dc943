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

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nmq/cli/map_io.hpp"
#include "nmq/cli/reports.hpp"
#include "nmq/cli/scenario.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfigError = 2;
constexpr int kExitNumericalRefusal = 3;

struct SweepSpec {
  std::string param;
  std::vector<double> values;
};

// "param=v1,v2,v3" or "param=lo:hi:count" (inclusive linspace).
SweepSpec parse_sweep(const std::string& spec) {
  const auto eq = spec.find('=');
  if (eq == std::string::npos || eq == 0 || eq + 1 >= spec.size()) {
    throw std::invalid_argument("--sweep expects param=v1,v2,... or param=lo:hi:count");
  }
  SweepSpec s;
  s.param = spec.substr(0, eq);
  const std::string rest = spec.substr(eq + 1);

  if (rest.find(':') != std::string::npos) {
    std::istringstream in(rest);
    std::string lo_s, hi_s, n_s;
    if (!std::getline(in, lo_s, ':') || !std::getline(in, hi_s, ':') ||
        !std::getline(in, n_s)) {
      throw std::invalid_argument("--sweep range must be lo:hi:count");
    }
    const double lo = std::stod(lo_s);
    const double hi = std::stod(hi_s);
    const int n = std::stoi(n_s);
    if (n < 2) throw std::invalid_argument("--sweep count must be >= 2");
    for (int i = 0; i < n; ++i) {
      s.values.push_back(lo + (hi - lo) * static_cast<double>(i) /
                                  static_cast<double>(n - 1));
    }
  } else {
    std::istringstream in(rest);
    std::string item;
    while (std::getline(in, item, ',')) {
      s.values.push_back(std::stod(item));
    }
    if (s.values.empty()) throw std::invalid_argument("--sweep has no values");
  }
  return s;
}

void apply_sweep_value(nmq::cli::ScenarioConfig& config,
                       const std::string& param, double value) {
  if (param == "a1") {
    config.a0.a1 = value;
  } else if (param == "a2") {
    config.a0.a2 = value;
  } else if (param == "a3") {
    config.a0.a3 = value;
  } else if (param == "T") {
    config.collision_time = value;
  } else if (param == "gamma") {
    config.gamma = value;
  } else if (param == "t1") {
    config.t1 = value;
  } else {
    throw std::invalid_argument("--sweep parameter must be one of a1, a2, a3, "
                                "T, gamma, t1");
  }
}

int cmd_run(const std::string& config_path, const std::optional<std::string>& out,
            const std::optional<double>& t0, const std::optional<double>& t1,
            const std::optional<double>& dt,
            const std::optional<std::string>& sweep) {
  nmq::cli::ScenarioConfig config = nmq::cli::load_scenario(config_path);
  if (t0) config.t0 = *t0;
  if (t1) config.t1 = *t1;
  if (dt) config.dt = *dt;
  if (out) config.out_path = *out;

  if (sweep) {
    const SweepSpec spec = parse_sweep(*sweep);
    std::ofstream file(config.out_path);
    if (!file) {
      throw std::invalid_argument("cannot write output file: " +
                                  config.out_path);
    }
    file << "sweep_index," << spec.param
         << ",final_a1,final_a2,final_a3,final_bloch_norm,final_purity,"
            "min_eig_seen\n";
    for (size_t i = 0; i < spec.values.size(); ++i) {
      nmq::cli::ScenarioConfig point = config;
      apply_sweep_value(point, spec.param, spec.values[i]);
      const nmq::Trajectory traj = nmq::cli::run_scenario(point);
      if (!traj.abort_reason.empty()) {
        throw nmq::NumericalRefusal(traj.abort_reason);
      }
      const nmq::cli::RunSummary s = nmq::cli::summarize(traj);
      const nmq::BlochVector a =
          traj.bloch.empty() ? nmq::BlochVector{} : traj.bloch.back();
      file << i << ',' << nmq::cli::format_double(spec.values[i]) << ','
           << nmq::cli::format_double(a.a1) << ','
           << nmq::cli::format_double(a.a2) << ','
           << nmq::cli::format_double(a.a3) << ','
           << nmq::cli::format_double(s.final_bloch_norm) << ','
           << nmq::cli::format_double(traj.purity.back()) << ','
           << nmq::cli::format_double(s.min_eigenvalue_seen) << '\n';
      std::cout << "sweep " << i << ": " << spec.param << " = "
                << nmq::cli::format_double(spec.values[i])
                << "  final |a| = "
                << nmq::cli::format_double(s.final_bloch_norm) << "\n";
    }
    std::cout << "wrote " << config.out_path << "\n";
    return kExitOk;
  }

  const nmq::Trajectory traj = nmq::cli::run_scenario(config);
  if (!traj.abort_reason.empty()) {
    // Keep whatever was computed, then report the refusal.
    nmq::cli::write_trajectory_csv(config.out_path, traj);
    throw nmq::NumericalRefusal(traj.abort_reason);
  }
  nmq::cli::write_trajectory_csv(config.out_path, traj);
  const nmq::cli::RunSummary s = nmq::cli::summarize(traj);
  std::cout << "rows:            " << traj.size() << "\n"
            << "final |a|:       " << nmq::cli::format_double(s.final_bloch_norm)
            << "\n"
            << "max |trace - 1|: " << nmq::cli::format_double(s.max_trace_error)
            << "\n"
            << "min eigenvalue:  "
            << nmq::cli::format_double(s.min_eigenvalue_seen) << "\n"
            << "wrote " << config.out_path << "\n";
  return kExitOk;
}

int cmd_analyze(const std::string& map_path, int samples, std::uint64_t seed,
                const std::optional<std::string>& out) {
  const nmq::cli::AnyMap map = nmq::cli::load_map(map_path);
  const nlohmann::json report = nmq::cli::analyze_map(map, samples, seed);
  nmq::cli::print_analysis(std::cout, report);
  if (out) {
    std::ofstream file(*out);
    if (!file) {
      throw std::invalid_argument("cannot write report file: " + *out);
    }
    file << report.dump(2) << "\n";
    std::cout << "wrote " << *out << "\n";
  }
  return kExitOk;
}

int cmd_canonical(const std::string& config_path, double t_from, double t_to,
                  std::uint64_t seed, const std::optional<std::string>& out,
                  const std::optional<std::string>& out_map) {
  const nmq::cli::ScenarioConfig config = nmq::cli::load_scenario(config_path);
  const nlohmann::json report =
      nmq::cli::canonical_report(config, t_from, t_to, seed);
  nmq::cli::print_canonical(std::cout, report);
  if (out) {
    std::ofstream file(*out);
    if (!file) {
      throw std::invalid_argument("cannot write report file: " + *out);
    }
    file << report.dump(2) << "\n";
    std::cout << "wrote " << *out << "\n";
  }
  if (out_map) {
    const nmq::TotalDynamics td = config.make_dynamics();
    const nmq::CanonicalMap map = nmq::canonical_map(td, t_from, t_to);
    nmq::cli::save_map(*out_map, nmq::cli::map_to_json(map.b()));
    std::cout << "wrote " << *out_map << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"open quantum system dynamical maps: scenario runs, map "
               "analysis, canonical-map reports"};
  app.require_subcommand(1);

  std::string config_path;
  std::string map_path;
  std::optional<std::string> out;
  std::optional<double> t0, t1, dt;
  std::optional<std::string> sweep;
  int samples = 500;
  std::uint64_t seed = 0;
  double canonical_t_from = 0.0;
  double canonical_t_to = 0.0;

  CLI::App* run = app.add_subcommand("run", "run a scenario and write a trajectory CSV");
  run->add_option("--config", config_path, "scenario JSON file")->required();
  run->add_option("--out", out, "output CSV path (overrides config)");
  run->add_option("--t0", t0, "start time (overrides config)");
  run->add_option("--t1", t1, "end time (overrides config)");
  run->add_option("--dt", dt, "time step (overrides config)");
  run->add_option("--sweep", sweep,
                  "sweep one scalar: param=v1,v2,... or param=lo:hi:count");

  CLI::App* analyze =
      app.add_subcommand("analyze-map", "report properties of a map JSON file");
  analyze->add_option("map", map_path, "map JSON file")->required();
  analyze->add_option("--samples", samples, "positivity sample count");
  analyze->add_option("--seed", seed, "sampling seed");
  analyze->add_option("--out", out, "also write the report as JSON");

  CLI::App* canonical = app.add_subcommand(
      "canonical", "canonical map between two times for a scenario");
  canonical->add_option("t1", canonical_t_from, "map source time")->required();
  canonical->add_option("t2", canonical_t_to, "map target time")->required();
  canonical->add_option("--config", config_path, "scenario JSON file")->required();
  canonical->add_option("--seed", seed, "group-check seed");
  canonical->add_option("--out", out, "also write the report as JSON");
  std::optional<std::string> out_map;
  canonical->add_option("--out-map", out_map,
                        "write the canonical map itself as map JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitConfigError;
  }

  try {
    if (run->parsed()) return cmd_run(config_path, out, t0, t1, dt, sweep);
    if (analyze->parsed()) return cmd_analyze(map_path, samples, seed, out);
    if (canonical->parsed()) {
      return cmd_canonical(config_path, canonical_t_from, canonical_t_to, seed,
                           out, out_map);
    }
  } catch (const nmq::NumericalRefusal& e) {
    std::cerr << "numerical refusal: " << e.what() << "\n";
    return kExitNumericalRefusal;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfigError;
  }
  return kExitConfigError;
}
