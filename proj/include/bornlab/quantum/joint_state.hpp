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

#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "bornlab/quantum/density_matrix.hpp"
#include "bornlab/quantum/state.hpp"

namespace bornlab::quantum {

enum class RegisterRole { kSystem, kDetector, kObserver, kEnvironment };

const char* to_string(RegisterRole role);

struct Register {
  RegisterRole role;
  std::size_t dim;
};

// One nonzero component of a joint state: the label in every register.
struct Branch {
  std::vector<std::size_t> labels;
  Complex amplitude;
  double presence;
};

// Amplitudes over the tensor product of several registers. The first register
// is the most significant digit of the flat index.
class JointState {
 public:
  JointState(std::vector<Register> registers, Eigen::VectorXcd amplitudes);

  // A single system register holding `state`.
  static JointState from_system(const StateVector& state);

  const std::vector<Register>& registers() const { return registers_; }
  const Eigen::VectorXcd& amplitudes() const { return amplitudes_; }
  std::size_t size() const { return static_cast<std::size_t>(amplitudes_.size()); }

  std::size_t flat_index(const std::vector<std::size_t>& labels) const;
  std::vector<std::size_t> labels_of(std::size_t flat) const;
  Complex amplitude(const std::vector<std::size_t>& labels) const;

  // Registers with the given role, in order.
  std::vector<std::size_t> registers_with(RegisterRole role) const;
  bool has(RegisterRole role) const { return !registers_with(role).empty(); }

  // Components with |amplitude| > 0, in flat-index order.
  std::vector<Branch> branches() const;

  // Presence summed over every register except `reg`.
  std::vector<double> marginal_presence(std::size_t reg) const;

  double norm_squared() const { return amplitudes_.squaredNorm(); }

 private:
  std::vector<Register> registers_;
  Eigen::VectorXcd amplitudes_;
};

// Kronecker product; registers of `b` follow those of `a`.
JointState tensor(const JointState& a, const JointState& b);

// Couples a fresh detector, prepared in its null pointer state, to the system:
// sum_b c_b |b>|M_null>  ->  sum_b c_b |b>|M_b>.
// Pointer M_b is detector label b; the null pointer is label system.dimension().
JointState measure_entangle(const StateVector& system, std::size_t detector_dim);

// Appends an observer register that copies the joint reading of all detector
// registers. Observer label r (mixed radix over detector labels, first detector
// most significant) records the reading; label (product of detector dims) is the
// null state the observer starts in.
JointState observe_entangle(const JointState& joint);

// Label the observer uses for its initial, nothing-seen state.
std::size_t observer_null_label(const JointState& joint);

// Reduced density matrix of one register.
DensityMatrix partial_trace(const JointState& joint, std::size_t keep_register);

// Decoherence toy. Attaches `environment_qubits` qubits to a two-level system
// register; each qubit ends in |e0> = (1, 0) when the system label is 0 and in
// |e1> = (g, sqrt(1 - |g|^2)) when it is 1, so that <e0|e1> = g.
JointState entangle_environment(const JointState& joint, std::size_t system_register,
                                std::size_t environment_qubits, Complex overlap);

// Upper bound on qubits accepted by entangle_environment.
inline constexpr std::size_t kMaxEnvironmentQubits = 20;

// List of [labels, re, im] triples for the nonzero amplitudes.
nlohmann::json to_json(const JointState& joint);

}  // namespace bornlab::quantum
