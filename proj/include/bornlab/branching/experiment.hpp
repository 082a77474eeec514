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
#include <functional>
#include <span>
#include <vector>

#include "bornlab/quantum/state.hpp"

namespace bornlab::branching {

using quantum::BasisLabel;
using quantum::PresenceDistribution;

// N independent repetitions of one measurement with the given outcome
// presences, analysed with respect to a single focus outcome u.
class RepeatedExperiment {
 public:
  RepeatedExperiment(PresenceDistribution outcome_presences, std::size_t repetitions,
                     std::size_t focus_label_index);

  // Two outcomes {u, not-u} with presences {rho_u, 1 - rho_u}; u has index 0.
  static RepeatedExperiment binary(double rho_u, std::size_t repetitions);

  const PresenceDistribution& outcome_presences() const { return presences_; }
  std::size_t repetitions() const { return repetitions_; }
  std::size_t alphabet_size() const { return presences_.size(); }
  const BasisLabel& focus() const { return presences_.labels()[focus_position_]; }
  std::size_t focus_position() const { return focus_position_; }

  double rho_u() const { return presences_[focus_position_]; }
  // Summed presence of every other outcome.
  double rho_not_u() const;

  // Same outcomes and focus, different N.
  RepeatedExperiment with_repetitions(std::size_t repetitions) const;

 private:
  PresenceDistribution presences_;
  std::size_t repetitions_;
  std::size_t focus_position_;
};

// One outcome sequence. `sequence` holds positions into the experiment's
// outcome labels, first measurement first. The presence is the product of the
// per-outcome presences and can underflow to 0 for long sequences.
struct BranchRecord {
  std::vector<std::size_t> sequence;
  double presence = 0.0;

  std::size_t count_of(std::size_t position) const;
};

// Largest number of sequences enumerate_branches will materialize.
inline constexpr std::size_t kMaxEnumeratedBranches = std::size_t{1} << 24;

// Every outcome sequence of length N with its presence. Throws
// std::length_error when alphabet^N exceeds kMaxEnumeratedBranches.
std::vector<BranchRecord> enumerate_branches(const RepeatedExperiment& exp);

// Streaming form of enumerate_branches; the record is reused between calls.
void for_each_branch(const RepeatedExperiment& exp,
                     const std::function<void(const BranchRecord&)>& visit);

// Sums branch presences by the number of focus outcomes in each sequence.
std::vector<double> aggregate_by_count(const RepeatedExperiment& exp,
                                       std::span<const BranchRecord> records);

}  // namespace bornlab::branching
