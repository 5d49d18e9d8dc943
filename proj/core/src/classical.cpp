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

#include "nmq/classical.hpp"

#include <string>

namespace nmq {

ProbabilityVector::ProbabilityVector(Eigen::VectorXd p, double tol)
    : p_(std::move(p)) {
  if (p_.size() == 0) {
    throw std::invalid_argument("ProbabilityVector: empty");
  }
  if (!p_.allFinite()) {
    throw std::invalid_argument("ProbabilityVector: entries must be finite");
  }
  if (p_.minCoeff() < -tol) {
    throw std::invalid_argument("ProbabilityVector: negative component " +
                                std::to_string(p_.minCoeff()));
  }
  if (std::abs(p_.sum() - 1.0) > tol) {
    throw std::invalid_argument("ProbabilityVector: components sum to " +
                                std::to_string(p_.sum()));
  }
}

StochasticMatrix::StochasticMatrix(Eigen::MatrixXd m, double tol)
    : m_(std::move(m)) {
  if (m_.rows() != m_.cols() || m_.rows() == 0) {
    throw std::invalid_argument("StochasticMatrix: must be square");
  }
  if (!m_.allFinite()) {
    throw std::invalid_argument("StochasticMatrix: entries must be finite");
  }
  if (m_.minCoeff() < -tol) {
    throw std::invalid_argument("StochasticMatrix: negative entry " +
                                std::to_string(m_.minCoeff()));
  }
  for (Eigen::Index c = 0; c < m_.cols(); ++c) {
    const double col_sum = m_.col(c).sum();
    if (std::abs(col_sum - 1.0) > tol) {
      throw std::invalid_argument("StochasticMatrix: column " +
                                  std::to_string(c) + " sums to " +
                                  std::to_string(col_sum));
    }
  }
}

ProbabilityVector apply_stochastic(const StochasticMatrix& m,
                                   const ProbabilityVector& p) {
  if (m.dim() != p.dim()) {
    throw std::invalid_argument("apply_stochastic: dimension mismatch");
  }
  // The product of a stochastic matrix and a simplex point is again a simplex
  // point up to roundoff; validate with a slightly relaxed tolerance.
  return ProbabilityVector(m.matrix() * p.vector(), 1e-9);
}

bool is_bistochastic(const StochasticMatrix& m, double tol) {
  for (Eigen::Index r = 0; r < m.dim(); ++r) {
    if (std::abs(m.matrix().row(r).sum() - 1.0) > tol) return false;
  }
  return true;
}

StochasticPreimage pseudo_inverse_stochastic(const StochasticMatrix& m,
                                             const ProbabilityVector& p,
                                             double tol) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(
      m.matrix(), Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Eigen::VectorXd& sv = svd.singularValues();
  const double cutoff = 1e-12 * (sv.size() > 0 ? sv(0) : 0.0);

  Eigen::VectorXd inv_sv = Eigen::VectorXd::Zero(sv.size());
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > cutoff) inv_sv(i) = 1.0 / sv(i);
  }
  StochasticPreimage result;
  result.preimage = svd.matrixV() * inv_sv.asDiagonal() *
                    svd.matrixU().transpose() * p.vector();

  const bool simplex = result.preimage.minCoeff() >= -tol &&
                       std::abs(result.preimage.sum() - 1.0) <= tol;
  const bool reproduces =
      (m.matrix() * result.preimage - p.vector()).cwiseAbs().maxCoeff() <= tol;
  result.in_domain = simplex && reproduces;
  return result;
}

}  // namespace nmq
