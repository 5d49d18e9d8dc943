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

#include <benchmark/benchmark.h>

#include <numbers>

#include "nmq/canonical.hpp"
#include "nmq/map_algebra.hpp"
#include "nmq/master_equation.hpp"
#include "nmq/open_system.hpp"

namespace {

using namespace nmq;

Matrix swap_hamiltonian() {
  Matrix h = Matrix::Zero(4, 4);
  for (int j = 1; j <= 3; ++j) h += 0.5 * kron(pauli(j), pauli(j));
  return h;
}

TotalDynamics swap_dynamics() {
  return TotalDynamics(swap_hamiltonian(), 0.0,
                       DensityMatrix(0.5 * identity2()), 2, 2);
}

void BM_ReducedMapTomography(benchmark::State& state) {
  const TotalDynamics td = swap_dynamics();
  double t = 0.3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(reduced_dynamical_map_a(td, t));
    t += 1e-6;
  }
}
BENCHMARK(BM_ReducedMapTomography);

void BM_SpectralDecompose(benchmark::State& state) {
  const TotalDynamics td = swap_dynamics();
  const BForm b = reduced_dynamical_map(td, 0.7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(spectral_decompose(b));
  }
}
BENCHMARK(BM_SpectralDecompose);

void BM_PseudoInverse(benchmark::State& state) {
  const TotalDynamics td = swap_dynamics();
  const AForm a = reduced_dynamical_map_a(td, 0.7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pseudo_inverse_a(a));
  }
}
BENCHMARK(BM_PseudoInverse);

void BM_CanonicalMap(benchmark::State& state) {
  const TotalDynamics td = swap_dynamics();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        canonical_map(td, std::numbers::pi / 3, std::numbers::pi / 4));
  }
}
BENCHMARK(BM_CanonicalMap);

void BM_FlowGenerator(benchmark::State& state) {
  const TotalDynamics td = swap_dynamics();
  for (auto _ : state) {
    benchmark::DoNotOptimize(flow_generator_a(td, 0.7));
  }
}
BENCHMARK(BM_FlowGenerator);

void BM_NonMarkovianStep(benchmark::State& state) {
  const TotalDynamics td = swap_dynamics();
  const DensityMatrix eta0 = bloch_to_density({1, 0, 0});
  const double dt = 1e-3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        integrate_nonmarkovian(td, eta0, 0.5, 0.5 + 10 * dt, dt));
  }
}
BENCHMARK(BM_NonMarkovianStep);

}  // namespace

BENCHMARK_MAIN();
