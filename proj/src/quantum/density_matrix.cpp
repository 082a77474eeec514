// Copyright 2026 The bornlab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bornlab/quantum/density_matrix.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "bornlab/tolerances.hpp"

namespace bornlab::quantum {

DensityMatrix::DensityMatrix(Eigen::MatrixXcd entries) : entries_(std::move(entries)) {
  if (entries_.rows() == 0 || entries_.rows() != entries_.cols()) {
    throw std::invalid_argument("density matrix must be a non-empty square matrix");
  }
  if (!entries_.allFinite()) throw std::invalid_argument("density matrix: non-finite entry");
  const Eigen::Index n = entries_.rows();
  for (Eigen::Index i = 0; i < n; ++i) {
    if (entries_(i, i).real() < tol::kDiagonalFloor) {
      throw std::invalid_argument("density matrix: negative diagonal entry at " +
                                  std::to_string(i));
    }
    for (Eigen::Index j = i; j < n; ++j) {
      if (std::abs(entries_(i, j) - std::conj(entries_(j, i))) > tol::kHermitian) {
        throw std::invalid_argument("density matrix is not hermitian");
      }
    }
  }
  const double trace = entries_.trace().real();
  if (std::abs(trace - 1.0) > tol::kNorm) {
    throw std::invalid_argument("density matrix trace is " + std::to_string(trace) + ", not 1");
  }
}

double DensityMatrix::purity() const { return (entries_ * entries_).trace().real(); }

double coherence(const DensityMatrix& rho) {
  const auto& m = rho.entries();
  double total = 0.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (i != j) total += std::abs(m(i, j));
    }
  }
  return total;
}

}  // namespace bornlab::quantum
