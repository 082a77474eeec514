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

#include "bornlab/quantum/joint_state.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "bornlab/tolerances.hpp"

namespace bornlab::quantum {
namespace {

std::size_t product_of_dims(const std::vector<Register>& registers) {
  std::size_t total = 1;
  for (const auto& r : registers) {
    if (r.dim == 0) throw std::invalid_argument("register dimension must be positive");
    total *= r.dim;
  }
  return total;
}

// Appends a register prepared in `label` (a product state, no entanglement).
JointState append_register(const JointState& joint, Register reg, std::size_t label) {
  Eigen::VectorXcd fresh = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(reg.dim));
  fresh(static_cast<Eigen::Index>(label)) = 1.0;
  return tensor(joint, JointState({reg}, std::move(fresh)));
}

// Controlled pointer shift: on the branch where the control registers read v
// (mixed radix), swap the target's null label with label v. A swap is its own
// inverse, so this is a permutation of the basis and therefore unitary.
JointState record(const JointState& joint, const std::vector<std::size_t>& controls,
                  std::size_t target, std::size_t null_label) {
  const auto& regs = joint.registers();
  const std::size_t target_dim = regs[target].dim;
  Eigen::VectorXcd out(joint.amplitudes().size());
  for (std::size_t flat = 0; flat < joint.size(); ++flat) {
    auto labels = joint.labels_of(flat);
    std::size_t reading = 0;
    for (std::size_t c : controls) reading = reading * regs[c].dim + labels[c];
    if (reading >= target_dim) {
      throw std::logic_error("record: target register too small for the reading");
    }
    auto& t = labels[target];
    if (t == null_label) {
      t = reading;
    } else if (t == reading) {
      t = null_label;
    }
    out(static_cast<Eigen::Index>(joint.flat_index(labels))) =
        joint.amplitudes()(static_cast<Eigen::Index>(flat));
  }
  return JointState(regs, std::move(out));
}

}  // namespace

const char* to_string(RegisterRole role) {
  switch (role) {
    case RegisterRole::kSystem: return "system";
    case RegisterRole::kDetector: return "detector";
    case RegisterRole::kObserver: return "observer";
    case RegisterRole::kEnvironment: return "environment";
  }
  return "unknown";
}

JointState::JointState(std::vector<Register> registers, Eigen::VectorXcd amplitudes)
    : registers_(std::move(registers)), amplitudes_(std::move(amplitudes)) {
  if (registers_.empty()) throw std::invalid_argument("joint state needs at least one register");
  if (static_cast<Eigen::Index>(product_of_dims(registers_)) != amplitudes_.size()) {
    throw std::invalid_argument("joint state: amplitude count does not match register dims");
  }
  if (!amplitudes_.allFinite()) throw std::invalid_argument("joint state: non-finite amplitude");
  const double n2 = amplitudes_.squaredNorm();
  if (std::abs(n2 - 1.0) > tol::kNorm) {
    throw NormalizationError("joint state is not normalized", n2);
  }
}

JointState JointState::from_system(const StateVector& state) {
  return JointState({{RegisterRole::kSystem, state.dimension()}}, state.amplitudes());
}

std::size_t JointState::flat_index(const std::vector<std::size_t>& labels) const {
  if (labels.size() != registers_.size()) {
    throw std::invalid_argument("joint state: expected " + std::to_string(registers_.size()) +
                                " labels");
  }
  std::size_t flat = 0;
  for (std::size_t r = 0; r < registers_.size(); ++r) {
    if (labels[r] >= registers_[r].dim) throw std::out_of_range("joint state: label out of range");
    flat = flat * registers_[r].dim + labels[r];
  }
  return flat;
}

std::vector<std::size_t> JointState::labels_of(std::size_t flat) const {
  std::vector<std::size_t> labels(registers_.size());
  for (std::size_t r = registers_.size(); r-- > 0;) {
    labels[r] = flat % registers_[r].dim;
    flat /= registers_[r].dim;
  }
  return labels;
}

Complex JointState::amplitude(const std::vector<std::size_t>& labels) const {
  return amplitudes_(static_cast<Eigen::Index>(flat_index(labels)));
}

std::vector<std::size_t> JointState::registers_with(RegisterRole role) const {
  std::vector<std::size_t> out;
  for (std::size_t r = 0; r < registers_.size(); ++r) {
    if (registers_[r].role == role) out.push_back(r);
  }
  return out;
}

std::vector<Branch> JointState::branches() const {
  std::vector<Branch> out;
  for (std::size_t flat = 0; flat < size(); ++flat) {
    const Complex a = amplitudes_(static_cast<Eigen::Index>(flat));
    if (a != Complex{}) out.push_back({labels_of(flat), a, std::norm(a)});
  }
  return out;
}

std::vector<double> JointState::marginal_presence(std::size_t reg) const {
  if (reg >= registers_.size()) throw std::out_of_range("joint state: invalid register id");
  std::vector<double> out(registers_[reg].dim, 0.0);
  for (std::size_t flat = 0; flat < size(); ++flat) {
    out[labels_of(flat)[reg]] += std::norm(amplitudes_(static_cast<Eigen::Index>(flat)));
  }
  return out;
}

JointState tensor(const JointState& a, const JointState& b) {
  std::vector<Register> regs = a.registers();
  regs.insert(regs.end(), b.registers().begin(), b.registers().end());
  const Eigen::Index nb = b.amplitudes().size();
  Eigen::VectorXcd out(a.amplitudes().size() * nb);
  for (Eigen::Index i = 0; i < a.amplitudes().size(); ++i) {
    out.segment(i * nb, nb) = a.amplitudes()(i) * b.amplitudes();
  }
  return JointState(std::move(regs), std::move(out));
}

JointState measure_entangle(const StateVector& system, std::size_t detector_dim) {
  const std::size_t outcomes = system.dimension();
  if (detector_dim < outcomes + 1) {
    throw std::invalid_argument("measure_entangle: detector needs " + std::to_string(outcomes + 1) +
                                " pointer states (one per outcome plus null), got " +
                                std::to_string(detector_dim));
  }
  const double n2 = system.norm_squared();
  if (std::abs(n2 - 1.0) > tol::kNorm) {
    throw NormalizationError("measure_entangle requires a normalized state", n2);
  }
  const JointState before =
      append_register(JointState::from_system(system), {RegisterRole::kDetector, detector_dim},
                      outcomes);
  return record(before, {0}, 1, outcomes);
}

std::size_t observer_null_label(const JointState& joint) {
  std::size_t readings = 1;
  for (std::size_t d : joint.registers_with(RegisterRole::kDetector)) {
    readings *= joint.registers()[d].dim;
  }
  return readings;
}

JointState observe_entangle(const JointState& joint) {
  if (joint.has(RegisterRole::kObserver)) {
    throw std::invalid_argument("observe_entangle: observer register already present");
  }
  const auto detectors = joint.registers_with(RegisterRole::kDetector);
  if (detectors.empty() || !joint.has(RegisterRole::kSystem)) {
    throw std::invalid_argument("observe_entangle: needs system and detector registers");
  }
  const std::size_t null_label = observer_null_label(joint);
  const JointState before =
      append_register(joint, {RegisterRole::kObserver, null_label + 1}, null_label);
  return record(before, detectors, before.registers().size() - 1, null_label);
}

DensityMatrix partial_trace(const JointState& joint, std::size_t keep_register) {
  const auto& regs = joint.registers();
  if (keep_register >= regs.size()) {
    throw std::out_of_range("partial_trace: invalid register id " + std::to_string(keep_register));
  }
  std::size_t suffix = 1;
  for (std::size_t r = keep_register + 1; r < regs.size(); ++r) suffix *= regs[r].dim;
  const std::size_t dim = regs[keep_register].dim;
  const std::size_t rest = joint.size() / dim;

  // Row a holds psi(prefix, a, suffix) over the traced-out labels.
  Eigen::MatrixXcd m(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(rest));
  for (std::size_t flat = 0; flat < joint.size(); ++flat) {
    const std::size_t a = (flat / suffix) % dim;
    const std::size_t prefix = flat / (suffix * dim);
    const std::size_t col = prefix * suffix + flat % suffix;
    m(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(col)) =
        joint.amplitudes()(static_cast<Eigen::Index>(flat));
  }
  Eigen::MatrixXcd rho = m * m.adjoint();
  // Symmetrize away rounding so the hermiticity check is exact.
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return DensityMatrix(std::move(rho));
}

JointState entangle_environment(const JointState& joint, std::size_t system_register,
                                std::size_t environment_qubits, Complex overlap) {
  const auto& regs = joint.registers();
  if (system_register >= regs.size()) {
    throw std::out_of_range("entangle_environment: invalid register id");
  }
  if (regs[system_register].dim != 2) {
    throw std::invalid_argument("entangle_environment: system register must be two-level");
  }
  if (environment_qubits > kMaxEnvironmentQubits) {
    throw std::length_error("entangle_environment: at most " +
                            std::to_string(kMaxEnvironmentQubits) + " environment qubits");
  }
  if (std::abs(overlap) > 1.0) {
    throw std::invalid_argument("entangle_environment: |overlap| must not exceed 1");
  }
  const Complex e0[2] = {1.0, 0.0};
  const Complex e1[2] = {overlap, std::sqrt(std::max(0.0, 1.0 - std::norm(overlap)))};

  std::vector<Register> out_regs = regs;
  Eigen::VectorXcd amps = joint.amplitudes();
  std::size_t stride = 1;  // product of dims after the system register
  for (std::size_t r = system_register + 1; r < regs.size(); ++r) stride *= regs[r].dim;

  for (std::size_t q = 0; q < environment_qubits; ++q) {
    Eigen::VectorXcd next(amps.size() * 2);
    for (Eigen::Index i = 0; i < amps.size(); ++i) {
      const std::size_t sys = (static_cast<std::size_t>(i) / stride) % 2;
      const Complex* e = sys == 0 ? e0 : e1;
      next(2 * i) = amps(i) * e[0];
      next(2 * i + 1) = amps(i) * e[1];
    }
    amps = std::move(next);
    stride *= 2;
    out_regs.push_back({RegisterRole::kEnvironment, 2});
  }
  return JointState(std::move(out_regs), std::move(amps));
}

nlohmann::json to_json(const JointState& joint) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& b : joint.branches()) {
    out.push_back(nlohmann::json::array({b.labels, b.amplitude.real(), b.amplitude.imag()}));
  }
  return out;
}

}  // namespace bornlab::quantum
