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

#include "nmq/map_algebra.hpp"
#include "support/generators.hpp"

using namespace nmq;
using nmq::testing::Rng;
using nmq::testing::squeeze_a_matrix;
using nmq::testing::squeeze_b_matrix;

namespace {

// rho -> rho^T as an A form: A[(r's'),(rs)] = delta_{r's} delta_{s'r}.
AForm transpose_map() {
  Matrix a = Matrix::Zero(4, 4);
  for (Index rp = 0; rp < 2; ++rp) {
    for (Index sp = 0; sp < 2; ++sp) {
      a(rp * 2 + sp, sp * 2 + rp) = 1.0;
    }
  }
  return AForm(2, a);
}

}  // namespace

TEST_SUITE_BEGIN("map_algebra");

TEST_CASE("state vectorization uses 1 - a3 in the last component") {
  const DensityMatrix eta = bloch_to_density({0.3, -0.4, 0.5});
  const Vector v = vec_row_major(eta.matrix());
  CHECK(v(0) == Complex(0.5 * (1 + 0.5), 0.0));
  CHECK(v(1) == Complex(0.5 * 0.3, -0.5 * -0.4));
  CHECK(v(2) == Complex(0.5 * 0.3, 0.5 * -0.4));
  CHECK(v(3) == Complex(0.5 * (1 - 0.5), 0.0));
}

TEST_CASE("apply_a") {
  const AForm id = AForm::identity(2);
  Rng rng(11);
  const Matrix rho = nmq::testing::random_density(rng, 2);
  CHECK(max_abs_diff(id.apply(rho), rho) == 0.0);

  // squeeze with c^2 = 1/4 maps Bloch (1,0,0) to (1/4,0,0)
  const AForm squeeze(2, squeeze_a_matrix(0.25));
  const Matrix out = squeeze.apply(bloch_to_density({1, 0, 0}));
  const BlochVector a = density_to_bloch(DensityMatrix(out));
  CHECK(a.a1 == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(std::abs(a.a2) < 1e-15);
  CHECK(std::abs(a.a3) < 1e-15);

  // fully contracted map pins everything to the center
  const AForm pin(2, squeeze_a_matrix(0.0));
  CHECK(max_abs_diff(pin.apply(rho), 0.5 * identity2()) < 1e-15);

  CHECK_THROWS_AS(id.apply(Matrix::Identity(3, 3)), std::invalid_argument);
}

TEST_CASE("index exchange reproduces the Hermitian form") {
  const AForm a(2, squeeze_a_matrix(0.25));
  CHECK(max_abs_diff(a_to_b(a).matrix(), squeeze_b_matrix(0.25)) == 0.0);

  // exchange of the identity map gives the vectorized-identity projector
  const BForm b_id = a_to_b(AForm::identity(2));
  const Vector vec_id = vec_row_major(Matrix(identity2()));
  CHECK(max_abs_diff(b_id.matrix(), vec_id * vec_id.adjoint()) == 0.0);
}

TEST_CASE("index exchange is an exact involution") {
  // a_to_b is defined on Hermiticity-preserving maps, i.e. exactly those
  // whose exchanged supermatrix is Hermitian; sample that set directly.
  Rng rng(12);
  int worst_exact = 0;
  for (int i = 0; i < 1000; ++i) {
    const Index d = (i % 2 == 0) ? 2 : 3;
    const BForm b(d, nmq::testing::random_hermitian(rng, d * d));
    const AForm a = b_to_a(b);
    if (max_abs_diff(a_to_b(a).matrix(), b.matrix()) != 0.0) ++worst_exact;
    if (max_abs_diff(b_to_a(a_to_b(a)).matrix(), a.matrix()) != 0.0) {
      ++worst_exact;
    }
  }
  CHECK(worst_exact == 0);
}

TEST_CASE("apply_b") {
  const BForm b(2, squeeze_b_matrix(0.25));
  Matrix plus(2, 2);
  plus << 0.5, 0.5, 0.5, 0.5;
  Matrix expected(2, 2);
  expected << 0.5, 0.125, 0.125, 0.5;
  CHECK(max_abs_diff(b.apply(plus), expected) < 1e-15);

  // c = 1 is the identity action
  const BForm b_unit(2, squeeze_b_matrix(1.0));
  Rng rng(13);
  for (int i = 0; i < 10; ++i) {
    const Matrix rho = nmq::testing::random_density(rng, 2);
    CHECK(max_abs_diff(b_unit.apply(rho), rho) < 1e-15);
    CHECK(std::abs(b.apply(rho).trace() - Complex(1, 0)) < 1e-14);
  }
}

TEST_CASE("apply_a and apply_b agree through the exchange") {
  Rng rng(14);
  for (int i = 0; i < 100; ++i) {
    const BForm b = nmq::testing::random_tp_b(rng, 2, rng.uniform(0.0, 1.0));
    const AForm a = b_to_a(b);
    const Matrix rho = nmq::testing::random_density(rng, 2);
    CHECK(max_abs_diff(a.apply(rho), b.apply(rho)) < 1e-12);
  }
}

TEST_CASE("check_a_properties") {
  const MapPropertyReport forward =
      check_a_properties(AForm(2, squeeze_a_matrix(0.25)), 200, 7);
  CHECK(forward.trace_preserving);
  CHECK(forward.hermiticity_preserving);
  CHECK(forward.positive_on_samples);

  // the inverse squeeze expands the Bloch ball: trace preserved, positivity
  // lost on generic samples
  const MapPropertyReport inverse =
      check_a_properties(AForm(2, squeeze_a_matrix(4.0)), 200, 7);
  CHECK(inverse.trace_preserving);
  CHECK(inverse.hermiticity_preserving);
  CHECK_FALSE(inverse.positive_on_samples);
  CHECK(inverse.worst_min_eigenvalue < -1e-3);

  // transpose preserves the spectrum, so it passes all three action checks
  // (complete positivity is a different story, below)
  const MapPropertyReport transpose = check_a_properties(transpose_map(), 200, 7);
  CHECK(transpose.trace_preserving);
  CHECK(transpose.hermiticity_preserving);
  CHECK(transpose.positive_on_samples);
}

TEST_CASE("check_a_properties is deterministic for a fixed seed") {
  const AForm a(2, squeeze_a_matrix(4.0));
  const MapPropertyReport r1 = check_a_properties(a, 64, 99);
  const MapPropertyReport r2 = check_a_properties(a, 64, 99);
  CHECK(r1.worst_min_eigenvalue == r2.worst_min_eigenvalue);
}

TEST_CASE("spectral_decompose on the squeeze family") {
  const MapSpectrum spec = spectral_decompose(BForm(2, squeeze_b_matrix(0.25)));
  REQUIRE(spec.lambdas.size() == 4);
  CHECK(spec.lambdas[0] == doctest::Approx(0.875).epsilon(1e-12));
  for (int i = 1; i < 4; ++i) {
    CHECK(spec.lambdas[i] == doctest::Approx(0.375).epsilon(1e-12));
  }
  // nondegenerate top eigenmatrix is the normalized identity
  CHECK(max_abs_diff(spec.c_matrices[0], identity2() / std::sqrt(2.0)) < 1e-12);

  // trace orthonormality
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      const Complex overlap =
          (spec.c_matrices[i].adjoint() * spec.c_matrices[j]).trace();
      CHECK(std::abs(overlap - (i == j ? 1.0 : 0.0)) < 1e-12);
    }
  }

  // identity map
  const MapSpectrum id_spec = spectral_decompose(a_to_b(AForm::identity(2)));
  CHECK(id_spec.lambdas[0] == doctest::Approx(2.0));
  for (int i = 1; i < 4; ++i) {
    CHECK(id_spec.lambdas[i] == doctest::Approx(0.0));
  }
  CHECK(max_abs_diff(id_spec.c_matrices[0], identity2() / std::sqrt(2.0)) <
        1e-12);

  // inverse map at c^2 = 1/4
  const MapSpectrum inv_spec =
      spectral_decompose(a_to_b(AForm(2, squeeze_a_matrix(4.0))));
  CHECK(inv_spec.lambdas[0] == doctest::Approx(6.5).epsilon(1e-12));
  for (int i = 1; i < 4; ++i) {
    CHECK(inv_spec.lambdas[i] == doctest::Approx(-1.5).epsilon(1e-12));
  }
}

TEST_CASE("spectral reconstruction and trace identity") {
  Rng rng(15);
  for (int i = 0; i < 100; ++i) {
    const BForm b = nmq::testing::random_tp_b(rng, 2, rng.uniform(0.0, 0.8));
    const MapSpectrum spec = spectral_decompose(b);
    CHECK(max_abs_diff(spectrum_to_b(spec).matrix(), b.matrix()) < 1e-9);

    Matrix sum = Matrix::Zero(2, 2);
    for (size_t a = 0; a < spec.lambdas.size(); ++a) {
      sum += spec.lambdas[a] *
             (spec.c_matrices[a].adjoint() * spec.c_matrices[a]);
    }
    CHECK(max_abs_diff(sum, identity2()) < 1e-9);
  }
}

TEST_CASE("is_completely_positive") {
  for (double c2 : {1.0, 0.9, 0.5, 0.25, 0.05}) {
    CHECK(is_completely_positive(BForm(2, squeeze_b_matrix(c2))));
    if (c2 < 1.0) {
      CHECK_FALSE(
          is_completely_positive(a_to_b(AForm(2, squeeze_a_matrix(1.0 / c2)))));
    }
  }
  CHECK_FALSE(is_completely_positive(a_to_b(transpose_map())));
}

TEST_CASE("compose") {
  const AForm a(2, squeeze_a_matrix(0.25));
  CHECK(max_abs_diff(compose(a, AForm::identity(2)).matrix(), a.matrix()) ==
        0.0);

  // pseudo-inverse composes to the identity away from singular times
  const PseudoInverse inv = pseudo_inverse_a(a);
  CHECK(max_abs_diff(compose(a, inv.map).matrix(), Matrix::Identity(4, 4)) <
        1e-9);

  // shrink factors multiply
  const AForm chained =
      compose(AForm(2, squeeze_a_matrix(0.5)), AForm(2, squeeze_a_matrix(0.3)));
  CHECK(max_abs_diff(chained.matrix(), squeeze_a_matrix(0.15)) < 1e-14);
}

TEST_CASE("pseudo_inverse_a") {
  const PseudoInverse id_inv = pseudo_inverse_a(AForm::identity(2));
  CHECK(max_abs_diff(id_inv.map.matrix(), Matrix::Identity(4, 4)) < 1e-14);
  CHECK(id_inv.rank == 4);

  const PseudoInverse inv = pseudo_inverse_a(AForm(2, squeeze_a_matrix(0.25)));
  CHECK(max_abs_diff(inv.map.matrix(), squeeze_a_matrix(4.0)) < 1e-12);
  CHECK(inv.rank == 4);

  // at c = 0 the map is rank one; the pseudo-inverse fixes the center
  const PseudoInverse degenerate =
      pseudo_inverse_a(AForm(2, squeeze_a_matrix(0.0)));
  CHECK(degenerate.rank == 1);
  CHECK(max_abs_diff(degenerate.map.apply(Matrix(0.5 * identity2())),
                     0.5 * identity2()) < 1e-12);
}

TEST_CASE("pseudo_inverse_a inverts random full-rank maps") {
  Rng rng(16);
  int tested = 0;
  while (tested < 100) {
    const AForm a = nmq::testing::random_aform(rng, 2);
    Eigen::JacobiSVD<Matrix> svd(a.matrix());
    if (svd.singularValues().minCoeff() < 1e-3) continue;  // keep conditioned
    const PseudoInverse inv = pseudo_inverse_a(a);
    CHECK(max_abs_diff(inv.map.matrix() * a.matrix(),
                       Matrix::Identity(4, 4)) < 1e-9);
    ++tested;
  }
}

TEST_CASE("in_compatibility_domain") {
  Rng rng(17);
  const AForm id = AForm::identity(2);
  for (int i = 0; i < 10; ++i) {
    const DensityMatrix rho(nmq::testing::random_density(rng, 2));
    CHECK(in_compatibility_domain(id, rho, 1e-9));
  }

  // fully contracted: only the center survives
  const AForm pinned(2, squeeze_a_matrix(0.0));
  CHECK(in_compatibility_domain(pinned, DensityMatrix(0.5 * identity2()), 1e-9));
  CHECK_FALSE(
      in_compatibility_domain(pinned, bloch_to_density({0.5, 0, 0}), 1e-9));

  // quarter squeeze: domain is the ball of radius 1/4
  const AForm squeeze(2, squeeze_a_matrix(0.25));
  CHECK(in_compatibility_domain(squeeze, bloch_to_density({0.25, 0, 0}), 1e-9));
  CHECK_FALSE(
      in_compatibility_domain(squeeze, bloch_to_density({0.5, 0, 0}), 1e-9));
}

TEST_CASE("affine_to_a") {
  CHECK(max_abs_diff(affine_to_a(AffineQubitMap{}).matrix(),
                     Matrix::Identity(4, 4)) == 0.0);

  AffineQubitMap squeeze;
  squeeze.linear = 0.25 * Eigen::Matrix3d::Identity();
  CHECK(max_abs_diff(affine_to_a(squeeze).matrix(), squeeze_a_matrix(0.25)) <
        1e-15);

  // amplitude-damping endpoint: everything lands on the upper pole
  AffineQubitMap constant;
  constant.linear = Eigen::Matrix3d::Zero();
  constant.translation = Eigen::Vector3d(0, 0, 1);
  Matrix pole(2, 2);
  pole << 1, 0, 0, 0;
  Rng rng(18);
  for (int i = 0; i < 5; ++i) {
    const Matrix rho = nmq::testing::random_density(rng, 2);
    CHECK(max_abs_diff(affine_to_a(constant).apply(rho), pole) < 1e-14);
  }
}

TEST_CASE("affine round trip") {
  Rng rng(19);
  for (int i = 0; i < 50; ++i) {
    AffineQubitMap m;
    for (int r = 0; r < 3; ++r) {
      m.translation(r) = rng.uniform(-0.3, 0.3);
      for (int c = 0; c < 3; ++c) m.linear(r, c) = rng.uniform(-1.0, 1.0);
    }
    const AffineQubitMap back = affine_from_a(affine_to_a(m));
    CHECK((back.linear - m.linear).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((back.translation - m.translation).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("BForm rejects non-Hermitian supermatrices") {
  Matrix m = squeeze_b_matrix(0.25);
  m(0, 1) = Complex(0.1, 0.1);
  CHECK_THROWS_AS(BForm(2, m), std::invalid_argument);
}

TEST_SUITE_END();
