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

#ifndef NMQ_CLASSICAL_HPP
#define NMQ_CLASSICAL_HPP

#include <Eigen/Dense>

#include <stdexcept>

namespace nmq {

// Classical counterpart of the supermatrix calculus: column-stochastic
// matrices acting on probability simplices, with the same pseudo-inverse and
// compatibility-domain story in a setting where everything is elementary.
//
// A non-Markovian classical process is one whose transition matrix needs
// hidden outside variables; enlarging the state space to include them makes
// it Markovian again. That construction is exercised in the tests rather
// than given an API of its own.

inline constexpr double kSimplexTol = 1e-12;

/// Non-negative entries summing to 1, validated on construction.
class ProbabilityVector {
 public:
  explicit ProbabilityVector(Eigen::VectorXd p, double tol = kSimplexTol);

  const Eigen::VectorXd& vector() const { return p_; }
  Eigen::Index dim() const { return p_.size(); }

 private:
  Eigen::VectorXd p_;
};

/// Column-stochastic matrix (columns sum to 1, entries non-negative), acting
/// from the left: p(f) = M p(i).
class StochasticMatrix {
 public:
  explicit StochasticMatrix(Eigen::MatrixXd m, double tol = kSimplexTol);

  const Eigen::MatrixXd& matrix() const { return m_; }
  Eigen::Index dim() const { return m_.rows(); }

 private:
  Eigen::MatrixXd m_;
};

ProbabilityVector apply_stochastic(const StochasticMatrix& m,
                                   const ProbabilityVector& p);

/// Rows also sum to 1. Bi-stochastic matrices are the ones whose inverse can
/// act on the whole simplex (permutations, mixtures of permutations).
bool is_bistochastic(const StochasticMatrix& m, double tol = 1e-9);

struct StochasticPreimage {
  Eigen::VectorXd preimage;
  bool in_domain = false;
};

/// Moore-Penrose preimage of p under M. in_domain is true iff the preimage is
/// itself a probability vector and maps back onto p within tol, i.e. p lies
/// in the image of the simplex.
StochasticPreimage pseudo_inverse_stochastic(const StochasticMatrix& m,
                                             const ProbabilityVector& p,
                                             double tol = 1e-9);

}  // namespace nmq

#endif  // NMQ_CLASSICAL_HPP
