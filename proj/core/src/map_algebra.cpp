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

#include "nmq/map_algebra.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace nmq {

namespace {

void check_super_shape(Index dim, const Matrix& m, const char* what) {
  if (dim <= 0 || m.rows() != dim * dim || m.cols() != dim * dim) {
    throw std::invalid_argument(std::string(what) +
                                ": entries must be dim^2 x dim^2");
  }
  if (!all_finite(m)) {
    throw std::invalid_argument(std::string(what) + ": entries must be finite");
  }
}

// Distributions are constructed locally so a given seed always produces the
// same sequence regardless of prior calls.
Matrix ginibre(Index d, std::mt19937_64& rng) {
  std::normal_distribution<double> dist(0.0, 1.0);
  Matrix g(d, d);
  for (Index r = 0; r < d; ++r) {
    for (Index s = 0; s < d; ++s) {
      const double re = dist(rng);
      const double im = dist(rng);
      g(r, s) = Complex(re, im);
    }
  }
  return g;
}

// Random pure or mixed state; pure states probe the extreme points of the
// state set, Ginibre-induced mixed states the interior.
Matrix random_state(Index d, std::mt19937_64& rng, bool pure) {
  if (pure) {
    std::normal_distribution<double> dist(0.0, 1.0);
    Vector psi(d);
    for (Index i = 0; i < d; ++i) {
      const double re = dist(rng);
      const double im = dist(rng);
      psi(i) = Complex(re, im);
    }
    psi.normalize();
    return psi * psi.adjoint();
  }
  Matrix g = ginibre(d, rng);
  Matrix rho = g * g.adjoint();
  return rho / rho.trace();
}

}  // namespace

AForm::AForm(Index dim, Matrix entries) : dim_(dim), m_(std::move(entries)) {
  check_super_shape(dim_, m_, "AForm");
}

AForm AForm::identity(Index dim) {
  return AForm(dim, Matrix::Identity(dim * dim, dim * dim));
}

Matrix AForm::apply(const Matrix& rho) const {
  if (rho.rows() != dim_ || rho.cols() != dim_) {
    throw std::invalid_argument("AForm::apply: dimension mismatch");
  }
  return unvec_row_major(m_ * vec_row_major(rho), dim_, dim_);
}

BForm::BForm(Index dim, Matrix entries, double herm_tol)
    : dim_(dim), m_(std::move(entries)) {
  check_super_shape(dim_, m_, "BForm");
  if (!is_hermitian(m_, herm_tol)) {
    throw std::invalid_argument("BForm: supermatrix not Hermitian");
  }
}

BForm BForm::identity(Index dim) {
  return a_to_b(AForm::identity(dim));
}

Matrix BForm::apply(const Matrix& rho) const {
  if (rho.rows() != dim_ || rho.cols() != dim_) {
    throw std::invalid_argument("BForm::apply: dimension mismatch");
  }
  const Index d = dim_;
  Matrix out = Matrix::Zero(d, d);
  for (Index rp = 0; rp < d; ++rp) {
    for (Index sp = 0; sp < d; ++sp) {
      Complex acc(0.0, 0.0);
      for (Index r = 0; r < d; ++r) {
        for (Index s = 0; s < d; ++s) {
          acc += m_(rp * d + r, sp * d + s) * rho(r, s);
        }
      }
      out(rp, sp) = acc;
    }
  }
  return out;
}

Matrix exchange_supermatrix_indices(const Matrix& m, Index dim) {
  check_super_shape(dim, m, "exchange_supermatrix_indices");
  Matrix out(dim * dim, dim * dim);
  for (Index rp = 0; rp < dim; ++rp) {
    for (Index sp = 0; sp < dim; ++sp) {
      for (Index r = 0; r < dim; ++r) {
        for (Index s = 0; s < dim; ++s) {
          out(rp * dim + r, sp * dim + s) = m(rp * dim + sp, r * dim + s);
        }
      }
    }
  }
  return out;
}

BForm a_to_b(const AForm& a) {
  return BForm(a.dim(), exchange_supermatrix_indices(a.matrix(), a.dim()));
}

AForm b_to_a(const BForm& b) {
  return AForm(b.dim(), exchange_supermatrix_indices(b.matrix(), b.dim()));
}

MapSpectrum spectral_decompose(const BForm& b, double herm_tol) {
  if (!is_hermitian(b.matrix(), herm_tol)) {
    throw std::invalid_argument("spectral_decompose: B form not Hermitian");
  }
  const Index d = b.dim();
  Eigen::SelfAdjointEigenSolver<Matrix> solver(b.matrix());
  const Eigen::VectorXd& w = solver.eigenvalues();
  const Matrix& v = solver.eigenvectors();

  // Phase gauge: first entry of significant magnitude made real positive.
  std::vector<Vector> vecs(static_cast<size_t>(d * d));
  for (Index i = 0; i < d * d; ++i) {
    Vector col = v.col(i);
    const double mag = col.cwiseAbs().maxCoeff();
    for (Index k = 0; k < col.size(); ++k) {
      if (std::abs(col(k)) > 1e-12 * mag) {
        col *= std::conj(col(k)) / std::abs(col(k));
        break;
      }
    }
    vecs[static_cast<size_t>(i)] = col;
  }

  // Descending eigenvalues; degenerate blocks ordered lexicographically by
  // the phase-fixed eigenvector entries so output is reproducible.
  std::vector<Index> order(static_cast<size_t>(d * d));
  std::iota(order.begin(), order.end(), Index{0});
  auto lex_less = [&](Index i, Index j) {
    const Vector& x = vecs[static_cast<size_t>(i)];
    const Vector& y = vecs[static_cast<size_t>(j)];
    for (Index k = 0; k < x.size(); ++k) {
      if (x(k).real() != y(k).real()) return x(k).real() < y(k).real();
      if (x(k).imag() != y(k).imag()) return x(k).imag() < y(k).imag();
    }
    return false;
  };
  std::sort(order.begin(), order.end(), [&](Index i, Index j) {
    if (w(i) != w(j)) return w(i) > w(j);
    return lex_less(i, j);
  });

  MapSpectrum spec;
  spec.lambdas.reserve(order.size());
  spec.c_matrices.reserve(order.size());
  for (Index idx : order) {
    spec.lambdas.push_back(w(idx));
    spec.c_matrices.push_back(
        unvec_row_major(vecs[static_cast<size_t>(idx)], d, d));
  }
  return spec;
}

BForm spectrum_to_b(const MapSpectrum& s) {
  if (s.lambdas.empty() || s.lambdas.size() != s.c_matrices.size()) {
    throw std::invalid_argument("spectrum_to_b: malformed spectrum");
  }
  const Index d = s.c_matrices.front().rows();
  Matrix b = Matrix::Zero(d * d, d * d);
  for (size_t a = 0; a < s.lambdas.size(); ++a) {
    const Vector v = vec_row_major(s.c_matrices[a]);
    b += s.lambdas[a] * (v * v.adjoint());
  }
  return BForm(d, std::move(b));
}

bool is_completely_positive(const BForm& b, double tol) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(b.matrix(),
                                               Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff() >= -tol;
}

MapPropertyReport check_a_properties(const AForm& a, int n_samples,
                                     std::uint64_t seed, double tol) {
  const Index d = a.dim();
  const Matrix& m = a.matrix();
  MapPropertyReport report;

  // Trace preservation: sum_r' A[(r'r'),(rs)] = delta_rs.
  double trace_residual = 0.0;
  for (Index r = 0; r < d; ++r) {
    for (Index s = 0; s < d; ++s) {
      Complex acc(0.0, 0.0);
      for (Index rp = 0; rp < d; ++rp) {
        acc += m(rp * d + rp, r * d + s);
      }
      const double expected = (r == s) ? 1.0 : 0.0;
      trace_residual = std::max(trace_residual, std::abs(acc - expected));
    }
  }
  report.trace_residual = trace_residual;
  report.trace_preserving = trace_residual <= tol;

  // Hermiticity preservation: A[(s'r'),(sr)] = conj A[(r's'),(rs)].
  double herm_residual = 0.0;
  for (Index rp = 0; rp < d; ++rp) {
    for (Index sp = 0; sp < d; ++sp) {
      for (Index r = 0; r < d; ++r) {
        for (Index s = 0; s < d; ++s) {
          const Complex lhs = m(sp * d + rp, s * d + r);
          const Complex rhs = std::conj(m(rp * d + sp, r * d + s));
          herm_residual = std::max(herm_residual, std::abs(lhs - rhs));
        }
      }
    }
  }
  report.hermiticity_residual = herm_residual;
  report.hermiticity_preserving = herm_residual <= tol;

  // Positivity, sampled.
  std::mt19937_64 rng(seed);
  double worst = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n_samples; ++i) {
    const Matrix rho = random_state(d, rng, /*pure=*/(i % 2 == 0));
    Matrix out = a.apply(rho);
    // Hermitize before the eigensolve so a non-Hermiticity-preserving map
    // still yields a well-defined diagnostic.
    out = 0.5 * (out + Matrix(out.adjoint()));
    Eigen::SelfAdjointEigenSolver<Matrix> solver(out, Eigen::EigenvaluesOnly);
    worst = std::min(worst, solver.eigenvalues().minCoeff());
  }
  report.worst_min_eigenvalue = (n_samples > 0) ? worst : 0.0;
  report.positive_on_samples = report.worst_min_eigenvalue >= -tol;
  return report;
}

AForm compose(const AForm& a2, const AForm& a1) {
  if (a2.dim() != a1.dim()) {
    throw std::invalid_argument("compose: dimension mismatch");
  }
  return AForm(a1.dim(), a2.matrix() * a1.matrix());
}

PseudoInverse pseudo_inverse_a(const AForm& a, double sv_cutoff) {
  Eigen::JacobiSVD<Matrix> svd(a.matrix(),
                               Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Eigen::VectorXd& sv = svd.singularValues();
  const double largest = sv.size() > 0 ? sv(0) : 0.0;
  const double cutoff = sv_cutoff < 0.0 ? 1e-12 * largest : sv_cutoff;

  Vector inv_sv = Vector::Zero(sv.size());
  PseudoInverse result{AForm::identity(a.dim()), 0, largest, 0.0, cutoff};
  for (Index i = 0; i < sv.size(); ++i) {
    if (sv(i) >= cutoff && sv(i) > 0.0) {
      inv_sv(i) = 1.0 / sv(i);
      result.rank += 1;
      result.smallest_kept_sv = sv(i);  // singular values sorted descending
    }
  }
  result.map = AForm(
      a.dim(), svd.matrixV() * inv_sv.asDiagonal() * svd.matrixU().adjoint());
  return result;
}

bool in_compatibility_domain(const AForm& forward, const DensityMatrix& rho,
                             double tol) {
  if (forward.dim() != rho.dim()) {
    throw std::invalid_argument("in_compatibility_domain: dimension mismatch");
  }
  const PseudoInverse pinv = pseudo_inverse_a(forward);
  const Matrix preimage = pinv.map.apply(rho.matrix());

  if (std::abs(preimage.trace() - Complex(1.0, 0.0)) > tol) return false;
  if (!is_hermitian(preimage, tol)) return false;
  const Matrix herm = 0.5 * (preimage + Matrix(preimage.adjoint()));
  Eigen::SelfAdjointEigenSolver<Matrix> solver(herm, Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < -tol) return false;

  // The preimage must actually reproduce rho; outside the image of the
  // forward map the pseudo-inverse only gives a least-squares point.
  return max_abs_diff(forward.apply(preimage), rho.matrix()) <= tol;
}

AForm affine_to_a(const AffineQubitMap& map) {
  // Action on a basis element X: with t0 = Tr X and w_j = Tr[sigma_j X],
  // X -> (1/2)[ t0 * 1 + (linear * w + t0 * translation) . sigma ].
  const Index d = 2;
  Matrix a(d * d, d * d);
  for (Index r = 0; r < d; ++r) {
    for (Index s = 0; s < d; ++s) {
      Matrix e = Matrix::Zero(d, d);
      e(r, s) = 1.0;
      const Complex t0 = e.trace();
      Eigen::Vector3cd w;
      for (int j = 0; j < 3; ++j) {
        w(j) = (pauli(j + 1) * e).trace();
      }
      const Eigen::Vector3cd out_w =
          map.linear.cast<Complex>() * w + t0 * map.translation.cast<Complex>();
      Matrix image = 0.5 * t0 * identity2();
      for (int j = 0; j < 3; ++j) {
        image += 0.5 * out_w(j) * pauli(j + 1);
      }
      a.col(r * d + s) = vec_row_major(image);
    }
  }
  return AForm(d, std::move(a));
}

AffineQubitMap affine_from_a(const AForm& a) {
  if (a.dim() != 2) {
    throw std::invalid_argument("affine_from_a: requires a qubit map");
  }
  AffineQubitMap map;
  const Matrix image_of_identity = a.apply(Matrix(identity2()));
  for (int j = 0; j < 3; ++j) {
    map.translation(j) = 0.5 * (pauli(j + 1) * image_of_identity).trace().real();
  }
  for (int k = 0; k < 3; ++k) {
    const Matrix image = a.apply(Matrix(pauli(k + 1)));
    for (int j = 0; j < 3; ++j) {
      map.linear(j, k) = 0.5 * (pauli(j + 1) * image).trace().real();
    }
  }
  return map;
}

}  // namespace nmq
