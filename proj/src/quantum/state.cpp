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

#include "bornlab/quantum/state.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "bornlab/tolerances.hpp"

namespace bornlab::quantum {
namespace {

Eigen::VectorXcd to_eigen(const std::vector<Complex>& values) {
  Eigen::VectorXcd out(static_cast<Eigen::Index>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) out(static_cast<Eigen::Index>(i)) = values[i];
  return out;
}

std::string format_norm(double value) {
  std::ostringstream os;
  os.precision(17);
  os << value;
  return os.str();
}

}  // namespace

StateVector::StateVector(std::vector<Complex> amplitudes)
    : StateVector(canonical_basis(amplitudes.size()), to_eigen(amplitudes)) {}

StateVector::StateVector(std::vector<BasisLabel> labels, std::vector<Complex> amplitudes)
    : StateVector(std::move(labels), to_eigen(amplitudes)) {}

StateVector::StateVector(std::vector<BasisLabel> labels, Eigen::VectorXcd amplitudes)
    : labels_(std::move(labels)), amplitudes_(std::move(amplitudes)) {
  if (labels_.empty()) throw std::invalid_argument("state vector needs at least one basis label");
  if (static_cast<Eigen::Index>(labels_.size()) != amplitudes_.size()) {
    throw std::invalid_argument("state vector: label count does not match amplitude count");
  }
  require_unique_indices(labels_);
  if (!amplitudes_.allFinite()) throw std::invalid_argument("state vector: non-finite amplitude");
}

StateVector StateVector::normalized(std::vector<Complex> amplitudes) {
  auto labels = canonical_basis(amplitudes.size());
  return normalized(std::move(labels), std::move(amplitudes));
}

StateVector StateVector::normalized(std::vector<BasisLabel> labels,
                                    std::vector<Complex> amplitudes) {
  StateVector state(std::move(labels), std::move(amplitudes));
  const double n2 = state.norm_squared();
  if (std::abs(n2 - 1.0) > tol::kNorm) {
    throw NormalizationError("state vector is not normalized", n2);
  }
  return state;
}

double StateVector::norm_squared() const { return amplitudes_.squaredNorm(); }

PresenceDistribution::PresenceDistribution(std::vector<BasisLabel> labels,
                                           std::vector<double> values)
    : labels_(std::move(labels)), values_(std::move(values)) {
  if (values_.empty()) throw std::invalid_argument("presence distribution is empty");
  if (labels_.size() != values_.size()) {
    throw std::invalid_argument("presence distribution: label count does not match values");
  }
  require_unique_indices(labels_);
  double total = 0.0;
  for (double v : values_) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
      throw std::invalid_argument("presence values must be finite and non-negative");
    }
    total += v;
  }
  if (std::abs(total - 1.0) > tol::kNorm) {
    throw std::invalid_argument("presence values sum to " + format_norm(total) + ", not 1");
  }
}

PresenceDistribution::PresenceDistribution(std::vector<double> values)
    : PresenceDistribution(canonical_basis(values.size()), std::vector<double>(values)) {}

std::size_t PresenceDistribution::position_of(std::size_t label_index) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i].index == label_index) return i;
  }
  throw std::out_of_range("no outcome label with index " + std::to_string(label_index));
}

HermitianOperator::HermitianOperator(Eigen::MatrixXcd entries) : entries_(std::move(entries)) {
  if (entries_.rows() == 0 || entries_.rows() != entries_.cols()) {
    throw std::invalid_argument("hermitian operator must be a non-empty square matrix");
  }
  if (!entries_.allFinite()) throw std::invalid_argument("hermitian operator: non-finite entry");
  for (Eigen::Index i = 0; i < entries_.rows(); ++i) {
    for (Eigen::Index j = i; j < entries_.cols(); ++j) {
      if (std::abs(entries_(i, j) - std::conj(entries_(j, i))) > tol::kHermitian) {
        throw std::invalid_argument("operator is not hermitian at (" + std::to_string(i) + ", " +
                                    std::to_string(j) + ")");
      }
    }
  }
}

NormalizationError::NormalizationError(const std::string& what, double norm_squared)
    : std::invalid_argument(what + " (squared norm " + format_norm(norm_squared) + ")"),
      norm_squared_(norm_squared) {}

PresenceDistribution presence(const StateVector& state) {
  const double n2 = state.norm_squared();
  if (std::abs(n2 - 1.0) > tol::kNormInput) {
    throw NormalizationError("presence requires a normalized state", n2);
  }
  std::vector<double> values(state.dimension());
  for (std::size_t i = 0; i < values.size(); ++i) values[i] = std::norm(state.amplitude(i));
  // Inputs accepted at the looser tolerance are rescaled to meet the
  // distribution invariant.
  const double total = std::accumulate(values.begin(), values.end(), 0.0);
  if (std::abs(total - 1.0) > tol::kNorm) {
    for (double& v : values) v /= total;
  }
  return PresenceDistribution(state.labels(), std::move(values));
}

Eigen::MatrixXcd propagator(const HermitianOperator& hamiltonian, double duration) {
  if (!std::isfinite(duration)) throw std::invalid_argument("evolve: duration must be finite");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(hamiltonian.entries());
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("evolve: eigendecomposition did not converge");
  }
  const Eigen::VectorXd& energies = solver.eigenvalues();
  Eigen::VectorXcd phases(energies.size());
  for (Eigen::Index k = 0; k < energies.size(); ++k) {
    phases(k) = std::polar(1.0, -energies(k) * duration);
  }
  const Eigen::MatrixXcd& v = solver.eigenvectors();
  return v * phases.asDiagonal() * v.adjoint();
}

StateVector evolve(const StateVector& state, const HermitianOperator& hamiltonian,
                   double duration) {
  if (hamiltonian.dimension() != state.dimension()) {
    throw std::invalid_argument("evolve: hamiltonian dimension " +
                                std::to_string(hamiltonian.dimension()) +
                                " does not match state dimension " +
                                std::to_string(state.dimension()));
  }
  Eigen::VectorXcd out = propagator(hamiltonian, duration) * state.amplitudes();
  return StateVector(state.labels(), std::move(out));
}

}  // namespace bornlab::quantum
