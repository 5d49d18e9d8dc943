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

#include "nmq/cli/reports.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <random>

#include "nmq/canonical.hpp"

namespace nmq::cli {

using nlohmann::json;

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

void write_trajectory_csv(const std::string& path, const Trajectory& traj) {
  std::ofstream out(path);
  if (!out) {
    throw std::invalid_argument("cannot write trajectory file: " + path);
  }
  out << "t,a1,a2,a3,purity,min_eig\n";
  const bool qubit = traj.bloch.size() == traj.times.size();
  for (size_t i = 0; i < traj.times.size(); ++i) {
    const BlochVector a = qubit ? traj.bloch[i] : BlochVector{};
    out << format_double(traj.times[i]) << ',' << format_double(a.a1) << ','
        << format_double(a.a2) << ',' << format_double(a.a3) << ','
        << format_double(traj.purity[i]) << ','
        << format_double(traj.min_eig[i]) << '\n';
  }
}

RunSummary summarize(const Trajectory& traj) {
  RunSummary s;
  s.aborted = traj.abort_reason;
  if (traj.times.empty()) return s;
  double max_trace_err = 0.0;
  double min_eig = traj.min_eig.front();
  for (size_t i = 0; i < traj.states.size(); ++i) {
    max_trace_err = std::max(
        max_trace_err, std::abs(traj.states[i].trace() - Complex(1.0, 0.0)));
    min_eig = std::min(min_eig, traj.min_eig[i]);
  }
  s.max_trace_error = max_trace_err;
  s.min_eigenvalue_seen = min_eig;
  if (!traj.bloch.empty()) s.final_bloch_norm = traj.bloch.back().norm();
  return s;
}

namespace {

// Exact reduced dynamics on a fixed grid: eta(t) = Tr_E[U (eta0 x tau) U^dag].
// Defined at every time, including where the map is singular.
Trajectory exact_reduced_trajectory(const TotalDynamics& td,
                                    const DensityMatrix& eta0, double t_start,
                                    double t_end, double dt) {
  Trajectory traj;
  const BipartiteOperator rho0{kron(eta0.matrix(), td.tau().matrix()),
                               td.dim_s(), td.dim_e()};
  double t = t_start;
  while (true) {
    const BipartiteOperator rho = evolve_total(td, rho0, td.t0(), t);
    const Matrix eta = partial_trace_env(rho);
    traj.times.push_back(t);
    traj.states.push_back(eta);
    if (eta.rows() == 2) {
      traj.bloch.push_back(BlochVector{(eta * sigma_x()).trace().real(),
                                       (eta * sigma_y()).trace().real(),
                                       (eta * sigma_z()).trace().real()});
    }
    traj.purity.push_back((eta * eta).trace().real());
    traj.min_eig.push_back(min_eigenvalue(0.5 * (eta + Matrix(eta.adjoint()))));
    if (t >= t_end - 1e-12 * std::max(1.0, std::abs(t_end))) break;
    t = std::min(t + dt, t_end);
  }
  return traj;
}

}  // namespace

Trajectory run_scenario(const ScenarioConfig& config) {
  switch (config.kind) {
    case ScenarioKind::kSwapQubit:
    case ScenarioKind::kCustom: {
      const TotalDynamics td = config.make_dynamics();
      DensityMatrix eta0 = config.initial_state();
      if (config.method == RunMethod::kMasterEquation) {
        return integrate_nonmarkovian(td, eta0, config.t0, config.t1,
                                      config.dt);
      }
      return exact_reduced_trajectory(td, eta0, config.t0, config.t1,
                                      config.dt);
    }
    case ScenarioKind::kCollision: {
      const TotalDynamics td = config.make_dynamics();
      const BForm single =
          reduced_dynamical_map(td, config.t0 + config.collision_time);
      return collision_simulate(single, config.collision_count,
                                config.initial_state(), config.t0,
                                config.collision_time);
    }
    case ScenarioKind::kLindblad: {
      LindbladModel model;
      model.h = Matrix::Zero(2, 2);
      for (int j = 1; j <= 3; ++j) {
        model.l_ops.push_back(std::sqrt(config.gamma / 4.0) * pauli(j));
      }
      return integrate_lindblad(model, config.initial_state(), config.t0,
                                config.t1, config.dt);
    }
    case ScenarioKind::kTruncated:
      return integrate_truncated(config.initial_state(), config.t0, config.t1,
                                 config.dt);
  }
  throw std::logic_error("run_scenario: unhandled scenario kind");
}

json analyze_map(const AnyMap& map, int n_samples, std::uint64_t seed) {
  const AForm a = as_a(map);
  const BForm b = as_b(map);

  const MapPropertyReport props = check_a_properties(a, n_samples, seed);
  const MapSpectrum spec = spectral_decompose(b);
  const PseudoInverse pinv = pseudo_inverse_a(a);

  json spectrum = json::array();
  for (double lambda : spec.lambdas) spectrum.push_back(lambda);

  return json{
      {"dim", a.dim()},
      {"trace_preserving", props.trace_preserving},
      {"trace_residual", props.trace_residual},
      {"hermiticity_preserving", props.hermiticity_preserving},
      {"hermiticity_residual", props.hermiticity_residual},
      {"positive_on_samples", props.positive_on_samples},
      {"worst_min_eigenvalue", props.worst_min_eigenvalue},
      {"samples", n_samples},
      {"seed", seed},
      {"choi_spectrum", spectrum},
      {"completely_positive", is_completely_positive(b)},
      {"pseudo_inverse_rank", pinv.rank},
      {"pseudo_inverse_largest_sv", pinv.largest_sv},
      {"pseudo_inverse_smallest_kept_sv", pinv.smallest_kept_sv},
  };
}

void print_analysis(std::ostream& os, const json& r) {
  os << "map analysis (dim " << r["dim"].get<Index>() << ")\n";
  os << "  trace preserving:       "
     << (r["trace_preserving"].get<bool>() ? "yes" : "no")
     << "  (residual " << format_double(r["trace_residual"].get<double>())
     << ")\n";
  os << "  hermiticity preserving: "
     << (r["hermiticity_preserving"].get<bool>() ? "yes" : "no")
     << "  (residual "
     << format_double(r["hermiticity_residual"].get<double>()) << ")\n";
  os << "  positive on " << r["samples"].get<int>()
     << " samples:   "
     << (r["positive_on_samples"].get<bool>() ? "yes" : "no")
     << "  (worst min eigenvalue "
     << format_double(r["worst_min_eigenvalue"].get<double>()) << ")\n";
  os << "  choi spectrum:         ";
  for (const auto& lambda : r["choi_spectrum"]) {
    os << ' ' << format_double(lambda.get<double>());
  }
  os << "\n  completely positive:    "
     << (r["completely_positive"].get<bool>() ? "yes" : "no") << "\n";
  os << "  pseudo-inverse rank:    " << r["pseudo_inverse_rank"].get<int>()
     << "\n";
}

json canonical_report(const ScenarioConfig& config, double t_from, double t_to,
                      std::uint64_t seed) {
  const TotalDynamics td = config.make_dynamics();
  const CanonicalMap map = canonical_map(td, t_from, t_to);

  const MapSpectrum spec = spectral_decompose(map.b());
  json spectrum = json::array();
  for (double lambda : spec.lambdas) spectrum.push_back(lambda);

  // Group-law residual through a random intermediate time; resample until the
  // intermediate forward map is comfortably invertible.
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(std::min(t_from, t_to),
                                              std::max(t_from, t_to));
  double t_mid = td.t0();
  double group_residual = -1.0;
  for (int attempt = 0; attempt < 64; ++attempt) {
    const double candidate = dist(rng);
    try {
      const CanonicalMap leg1 = canonical_map(td, t_from, candidate);
      const CanonicalMap leg2 = canonical_map(td, candidate, t_to);
      group_residual =
          max_abs_diff(compose(leg2, leg1).a().matrix(), map.a().matrix());
      t_mid = candidate;
      break;
    } catch (const NumericalRefusal&) {
      continue;
    }
  }
  if (group_residual < 0.0) {
    throw NumericalRefusal(
        "canonical_report: no non-singular intermediate time found");
  }

  json report{
      {"t_from", t_from},
      {"t_to", t_to},
      {"seed", seed},
      {"spectrum", spectrum},
      {"completely_positive", is_completely_positive(map.b())},
      {"inverse_rank", map.inverse_rank()},
      {"inverse_residual", map.inverse_residual()},
      {"group_law_intermediate_time", t_mid},
      {"group_law_residual", group_residual},
  };

  // Domain radius: smallest singular value of the Bloch-ball linear part of
  // the forward map at t_from.
  if (td.dim_s() == 2) {
    const AffineQubitMap affine =
        affine_from_a(reduced_dynamical_map_a(td, t_from));
    Eigen::JacobiSVD<Eigen::Matrix3d> svd(affine.linear);
    report["domain_radius"] = svd.singularValues().minCoeff();
    report["domain_center_shift"] = affine.translation.norm();
  }
  return report;
}

void print_canonical(std::ostream& os, const json& r) {
  os << "canonical map " << format_double(r["t_from"].get<double>()) << " -> "
     << format_double(r["t_to"].get<double>()) << "\n";
  os << "  spectrum:            ";
  for (const auto& lambda : r["spectrum"]) {
    os << ' ' << format_double(lambda.get<double>());
  }
  os << "\n  completely positive: "
     << (r["completely_positive"].get<bool>() ? "yes" : "no") << "\n";
  os << "  inverse rank:        " << r["inverse_rank"].get<int>()
     << "  (residual " << format_double(r["inverse_residual"].get<double>())
     << ")\n";
  os << "  group-law residual:  "
     << format_double(r["group_law_residual"].get<double>()) << "  (via t = "
     << format_double(r["group_law_intermediate_time"].get<double>()) << ")\n";
  if (r.contains("domain_radius")) {
    os << "  domain radius at t_from: "
       << format_double(r["domain_radius"].get<double>()) << "\n";
  }
}

}  // namespace nmq::cli
