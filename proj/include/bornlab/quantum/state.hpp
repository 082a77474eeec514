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

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "bornlab/quantum/basis.hpp"

namespace bornlab::quantum {

using Complex = std::complex<double>;

// Amplitudes over a labelled finite basis.
//
// The constructor only checks shape and finiteness; `normalized()` is the
// strict factory. Operations that need a normalized state check it themselves
// and report the offending norm.
class StateVector {
 public:
  explicit StateVector(std::vector<Complex> amplitudes);
  StateVector(std::vector<BasisLabel> labels, std::vector<Complex> amplitudes);
  StateVector(std::vector<BasisLabel> labels, Eigen::VectorXcd amplitudes);

  // Throws std::invalid_argument unless sum |a|^2 is within tol::kNorm of 1.
  static StateVector normalized(std::vector<Complex> amplitudes);
  static StateVector normalized(std::vector<BasisLabel> labels,
                                std::vector<Complex> amplitudes);

  std::size_t dimension() const { return labels_.size(); }
  const std::vector<BasisLabel>& labels() const { return labels_; }
  const Eigen::VectorXcd& amplitudes() const { return amplitudes_; }
  Complex amplitude(std::size_t position) const { return amplitudes_(static_cast<Eigen::Index>(position)); }

  // Sum of squared moduli.
  double norm_squared() const;

 private:
  std::vector<BasisLabel> labels_;
  Eigen::VectorXcd amplitudes_;
};

// Non-negative values over outcome labels that sum to one.
class PresenceDistribution {
 public:
  PresenceDistribution(std::vector<BasisLabel> labels, std::vector<double> values);
  explicit PresenceDistribution(std::vector<double> values);

  std::size_t size() const { return values_.size(); }
  const std::vector<BasisLabel>& labels() const { return labels_; }
  const std::vector<double>& values() const { return values_; }
  double operator[](std::size_t position) const { return values_[position]; }

  // Position of the label with the given index; throws std::out_of_range.
  std::size_t position_of(std::size_t label_index) const;

 private:
  std::vector<BasisLabel> labels_;
  std::vector<double> values_;
};

// Dense Hermitian matrix, checked elementwise against its adjoint.
class HermitianOperator {
 public:
  explicit HermitianOperator(Eigen::MatrixXcd entries);

  std::size_t dimension() const { return static_cast<std::size_t>(entries_.rows()); }
  const Eigen::MatrixXcd& entries() const { return entries_; }

 private:
  Eigen::MatrixXcd entries_;
};

// Thrown when an operation receives a state whose norm is off.
class NormalizationError : public std::invalid_argument {
 public:
  NormalizationError(const std::string& what, double norm_squared);
  double norm_squared() const { return norm_squared_; }

 private:
  double norm_squared_;
};

// |amplitude|^2 per label.
PresenceDistribution presence(const StateVector& state);

// exp(-i H t) applied to the state, hbar = 1. Uses the eigendecomposition of H,
// so the propagator is unitary up to rounding.
StateVector evolve(const StateVector& state, const HermitianOperator& hamiltonian,
                   double duration);

// The propagator itself, exposed for tests and the CLI.
Eigen::MatrixXcd propagator(const HermitianOperator& hamiltonian, double duration);

}  // namespace bornlab::quantum
