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

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "nmq/canonical.hpp"
#include "support/generators.hpp"

using namespace nmq;
using nmq::testing::Rng;

namespace {

constexpr double kPi = std::numbers::pi;

TotalDynamics swap_dynamics(double t0 = 0.0) {
  return TotalDynamics(nmq::testing::swap_hamiltonian(), t0,
                       DensityMatrix(0.5 * identity2()), 2, 2);
}

// Closed-form embedded state for the partial-swap model at t0 = 0:
// (1/4)[1x1 + sum_j a_j (sigma_j x 1 + tan^2 t 1 x sigma_j
//                        + tan t (sigma_k x sigma_l - sigma_l x sigma_k))]
// with (j, k, l) cyclic.
Matrix closed_form_embedding(double t, const BlochVector& a) {
  const double tn = std::tan(t);
  const double coeff[3] = {a.a1, a.a2, a.a3};
  Matrix rho = 0.25 * kron(identity2(), identity2());
  for (int j = 0; j < 3; ++j) {
    const int k = (j + 1) % 3;
    const int l = (j + 2) % 3;
    rho += 0.25 * coeff[j] *
           (kron(pauli(j + 1), identity2()) +
            tn * tn * kron(identity2(), pauli(j + 1)) +
            tn * (kron(pauli(k + 1), pauli(l + 1)) -
                  kron(pauli(l + 1), pauli(k + 1))));
  }
  return rho;
}

}  // namespace

TEST_SUITE_BEGIN("canonical");

TEST_CASE("canonical_map endpoints") {
  const TotalDynamics td = swap_dynamics();

  const CanonicalMap trivial = canonical_map(td, 0.7, 0.7);
  CHECK(max_abs_diff(trivial.a().matrix(), Matrix::Identity(4, 4)) < 1e-10);

  // from t0: the completely positive forward map
  const double t = kPi / 3.0;
  const CanonicalMap forward = canonical_map(td, 0.0, t);
  CHECK(max_abs_diff(forward.b().matrix(),
                     reduced_dynamical_map(td, t).matrix()) < 1e-10);
  CHECK(is_completely_positive(forward.b(), 1e-9));

  // to t0: the pseudo-inverse of the forward map
  const CanonicalMap backward = canonical_map(td, t, 0.0);
  const PseudoInverse pinv = pseudo_inverse_a(reduced_dynamical_map_a(td, t));
  CHECK(max_abs_diff(backward.a().matrix(), pinv.map.matrix()) < 1e-9);
  CHECK_FALSE(is_completely_positive(backward.b(), 1e-9));
}

TEST_CASE("canonical spectrum between two generic times") {
  const TotalDynamics td = swap_dynamics();
  // c^2 = cos^2(pi/4) = 1/2 over c~^2 = cos^2(pi/3) = 1/4 gives ratio 2
  const CanonicalMap map = canonical_map(td, kPi / 3.0, kPi / 4.0);
  const MapSpectrum spec = spectral_decompose(map.b());
  CHECK(spec.lambdas[0] == doctest::Approx(3.5).epsilon(1e-10));
  for (int i = 1; i < 4; ++i) {
    CHECK(spec.lambdas[i] == doctest::Approx(-0.5).epsilon(1e-10));
  }
  CHECK_FALSE(is_completely_positive(map.b(), 1e-9));

  // trace and Hermiticity preservation hold even for NCP canonical maps
  const MapPropertyReport props = check_a_properties(map.a(), 50, 3);
  CHECK(props.trace_preserving);
  CHECK(props.hermiticity_preserving);
}

TEST_CASE("canonical spectrum with a nonzero initial time") {
  const TotalDynamics td = swap_dynamics(0.25);
  const double t1 = 0.25 + kPi / 3.0;
  const double t2 = 0.25 + kPi / 4.0;
  const MapSpectrum spec = spectral_decompose(canonical_map(td, t1, t2).b());
  CHECK(spec.lambdas[0] == doctest::Approx(3.5).epsilon(1e-10));
  CHECK(spec.lambdas[3] == doctest::Approx(-0.5).epsilon(1e-10));
}

TEST_CASE("canonical maps compose as a group") {
  const TotalDynamics td = swap_dynamics();

  // inverse property
  const double t = kPi / 5.0;
  const CanonicalMap there = canonical_map(td, 0.0, t);
  const CanonicalMap back = canonical_map(td, t, 0.0);
  CHECK(max_abs_diff(compose(back, there).a().matrix(),
                     Matrix::Identity(4, 4)) < 1e-9);

  // chain through an intermediate time
  const CanonicalMap leg1 = canonical_map(td, 0.0, kPi / 5.0);
  const CanonicalMap leg2 = canonical_map(td, kPi / 5.0, kPi / 3.0);
  const CanonicalMap direct = canonical_map(td, 0.0, kPi / 3.0);
  const CanonicalMap chained = compose(leg2, leg1);
  CHECK(max_abs_diff(chained.a().matrix(), direct.a().matrix()) < 1e-9);
  CHECK(chained.t_from() == 0.0);
  CHECK(chained.t_to() == doctest::Approx(kPi / 3.0));

  // time-chain mismatch is rejected
  CHECK_THROWS_AS(compose(leg1, leg2), std::invalid_argument);

  // so are maps from different dynamics
  const TotalDynamics other = swap_dynamics();
  const CanonicalMap foreign = canonical_map(other, kPi / 5.0, kPi / 3.0);
  CHECK_THROWS_AS(compose(foreign, leg1), std::invalid_argument);
}

TEST_CASE("group law over random time pairs") {
  const TotalDynamics td = swap_dynamics();
  Rng rng(31);
  int checked = 0;
  while (checked < 20) {
    const double t1 = rng.uniform(-1.4, 1.4);
    const double tm = rng.uniform(-1.4, 1.4);
    const double t2 = rng.uniform(-1.4, 1.4);
    // keep clear of the singular times +/- pi/2
    const double margin = 0.05;
    if (std::abs(std::cos(t1)) < margin || std::abs(std::cos(tm)) < margin ||
        std::abs(std::cos(t2)) < margin) {
      continue;
    }
    const CanonicalMap direct = canonical_map(td, t1, t2);
    const CanonicalMap chained =
        compose(canonical_map(td, tm, t2), canonical_map(td, t1, tm));
    CHECK(max_abs_diff(direct.a().matrix(), chained.a().matrix()) < 1e-9);
    ++checked;
  }
}

TEST_CASE("canonical_map refuses singular times") {
  const TotalDynamics td = swap_dynamics();
  CHECK_THROWS_AS(canonical_map(td, kPi / 2.0, 0.3), NumericalRefusal);
  CHECK_THROWS_AS(canonical_map(td, kPi / 2.0 + 5e-4, 0.3), NumericalRefusal);
  // slightly farther out the inversion is allowed again
  CHECK_NOTHROW(canonical_map(td, kPi / 2.0 + 2e-2, 0.3));
}

TEST_CASE("canonical_map survives near-threshold inversions") {
  // Just above the refusal threshold the composed map has entries up to
  // ~1/sigma_min; construction must handle that scale.
  const TotalDynamics td = swap_dynamics();
  const double t_near = kPi / 2.0 - 1.8e-3;  // sigma_min = cos^2 ~ 3.2e-6
  const CanonicalMap map = canonical_map(td, t_near, 0.7);
  CHECK(max_abs(map.a().matrix()) > 1e4);
  const double c2 = std::pow(std::cos(0.7), 2);
  const double ratio = c2 / std::pow(std::cos(t_near), 2);
  const MapSpectrum spec = spectral_decompose(map.b());
  CHECK(spec.lambdas[0] ==
        doctest::Approx(0.5 * (1 + 3 * ratio)).epsilon(1e-7));
}

TEST_CASE("large-entry maps keep Hermiticity at the entry scale") {
  // Hermiticity-preserving complex map scaled to huge entries, plus
  // asymmetry noise at the roundoff scale of those entries: the kind of
  // matrix a composed near-singular inverse produces. An absolute Hermiticity
  // tolerance would reject it; the scale-relative one must not.
  Rng rng(33);
  const BForm seed_b(2, nmq::testing::random_hermitian(rng, 4));
  const Matrix clean = 1e6 * b_to_a(seed_b).matrix();
  Matrix noisy = clean;
  for (Index r = 0; r < 4; ++r) {
    for (Index s = 0; s < 4; ++s) {
      noisy(r, s) += Complex(rng.uniform(-1e-10, 1e-10),
                             rng.uniform(-1e-10, 1e-10)) *
                     max_abs(clean);
    }
  }
  const CanonicalMap map(AForm(2, noisy), 0.3, 0.7, nullptr, 4, 0.0);
  CHECK(is_hermitian(map.b().matrix(), 1e-12 * max_abs(map.b().matrix())));

  // a genuine Hermiticity-preservation failure still throws
  Matrix broken = clean;
  broken(0, 1) += 1e-4 * max_abs(clean);
  CHECK_THROWS_AS(CanonicalMap(AForm(2, broken), 0.3, 0.7, nullptr, 4, 0.0),
                  std::invalid_argument);
}

TEST_CASE("canonical_embedding at t0 is the product embedding") {
  const TotalDynamics td = swap_dynamics();
  const DensityMatrix eta = bloch_to_density({0.4, -0.1, 0.2});
  const EmbeddingResult r = canonical_embedding(td, 0.0, eta);
  CHECK(max_abs_diff(r.state.matrix,
                     kron(eta.matrix(), 0.5 * identity2())) < 1e-10);
  CHECK(r.min_eig >= -1e-10);
}

TEST_CASE("canonical_embedding matches the closed form") {
  const TotalDynamics td = swap_dynamics();
  for (double t : {0.3, kPi / 5.0, 1.1}) {
    // keep the state inside the compatibility domain (radius cos^2 t)
    const double c2 = std::pow(std::cos(t), 2);
    const BlochVector a{0.8 * c2, -0.5 * c2, 0.3 * c2};
    const EmbeddingResult r = canonical_embedding(td, t, bloch_to_density(a));
    CHECK(max_abs_diff(r.state.matrix, closed_form_embedding(t, a)) < 1e-9);
    // closure: tracing the environment recovers the reduced state
    CHECK(max_abs_diff(partial_trace_env(r.state),
                       bloch_to_density(a).matrix()) < 1e-9);
    CHECK(r.min_eig >= -1e-9);
  }
}

TEST_CASE("embedding positivity flags the compatibility domain") {
  const TotalDynamics td = swap_dynamics();
  // domain radius at pi/4 is cos^2 = 1/2
  const EmbeddingResult outside =
      canonical_embedding(td, kPi / 4.0, bloch_to_density({0.6, 0, 0}));
  CHECK(outside.min_eig == doctest::Approx(-0.05).epsilon(1e-9));
  CHECK(outside.min_eig < -1e-3);
  // still Hermitian and unit trace
  CHECK(std::abs(outside.state.matrix.trace() - Complex(1, 0)) < 1e-12);
  CHECK(is_hermitian(outside.state.matrix, 1e-12));

  const EmbeddingResult inside =
      canonical_embedding(td, kPi / 4.0, bloch_to_density({0.4, 0, 0}));
  CHECK(inside.min_eig == doctest::Approx(0.05).epsilon(1e-9));
}

TEST_CASE("embedding agrees with the compatibility-domain test") {
  const TotalDynamics td = swap_dynamics();
  Rng rng(32);
  for (double t : {0.35, 0.8, 1.2}) {
    const AForm forward = reduced_dynamical_map_a(td, t);
    const double radius = std::pow(std::cos(t), 2);
    for (int i = 0; i < 30; ++i) {
      // stay off the knife edge at |a| = radius
      const bool inside = i % 2 == 0;
      const double r = inside ? rng.uniform(0.0, 0.95 * radius)
                              : rng.uniform(1.05 * radius, 1.0);
      BlochVector a = nmq::testing::random_bloch(rng, 1.0);
      const double n = a.norm();
      if (n == 0.0) continue;
      a = BlochVector{a.a1 / n * r, a.a2 / n * r, a.a3 / n * r};
      const DensityMatrix eta = bloch_to_density(a);
      const bool in_domain = in_compatibility_domain(forward, eta, 1e-9);
      const EmbeddingResult embedded = canonical_embedding(td, t, eta);
      CHECK(in_domain == inside);
      CHECK((embedded.min_eig >= -1e-9) == inside);
    }
  }
}

TEST_CASE("embedding relocation identity") {
  const TotalDynamics td = swap_dynamics();
  const DensityMatrix eta = bloch_to_density({0.3, 0, 0});

  CHECK(embedding_relocation_residual(td, kPi / 5.0, kPi / 5.0, eta) < 1e-12);
  CHECK(embedding_relocation_residual(td, kPi / 5.0, kPi / 7.0, eta) < 1e-8);
  // relocating through t0 is the definition itself
  CHECK(embedding_relocation_residual(td, kPi / 5.0, 0.0, eta) < 1e-12);
}

TEST_SUITE_END();
