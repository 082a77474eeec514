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

#include "bornlab/branching/experiment.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace bornlab::branching {
namespace {

void require_enumerable(const RepeatedExperiment& exp) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < exp.repetitions(); ++i) {
    total *= exp.alphabet_size();
    if (total > kMaxEnumeratedBranches) {
      throw std::length_error("enumerate_branches: alphabet^N exceeds the limit of 2^24 = " +
                              std::to_string(kMaxEnumeratedBranches) + " sequences");
    }
  }
}

}  // namespace

RepeatedExperiment::RepeatedExperiment(PresenceDistribution outcome_presences,
                                       std::size_t repetitions, std::size_t focus_label_index)
    : presences_(std::move(outcome_presences)),
      repetitions_(repetitions),
      focus_position_(presences_.position_of(focus_label_index)) {
  if (repetitions_ == 0) throw std::invalid_argument("repeated experiment needs N >= 1");
}

RepeatedExperiment RepeatedExperiment::binary(double rho_u, std::size_t repetitions) {
  if (!(rho_u >= 0.0 && rho_u <= 1.0)) {
    throw std::invalid_argument("rho_u must lie in [0, 1]");
  }
  std::vector<BasisLabel> labels{{0, "u"}, {1, "not-u"}};
  return RepeatedExperiment(PresenceDistribution(std::move(labels), {rho_u, 1.0 - rho_u}),
                            repetitions, 0);
}

double RepeatedExperiment::rho_not_u() const {
  double sum = 0.0;
  for (std::size_t i = 0; i < presences_.size(); ++i) {
    if (i != focus_position_) sum += presences_[i];
  }
  return sum;
}

RepeatedExperiment RepeatedExperiment::with_repetitions(std::size_t repetitions) const {
  return RepeatedExperiment(presences_, repetitions, focus().index);
}

std::size_t BranchRecord::count_of(std::size_t position) const {
  return static_cast<std::size_t>(std::count(sequence.begin(), sequence.end(), position));
}

void for_each_branch(const RepeatedExperiment& exp,
                     const std::function<void(const BranchRecord&)>& visit) {
  require_enumerable(exp);
  const std::size_t n = exp.repetitions();
  const std::size_t d = exp.alphabet_size();
  const auto& p = exp.outcome_presences();

  BranchRecord record;
  record.sequence.assign(n, 0);
  while (true) {
    double presence = 1.0;
    for (std::size_t b : record.sequence) presence *= p[b];
    record.presence = presence;
    visit(record);

    // Odometer increment, last measurement fastest.
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (++record.sequence[i] < d) break;
      record.sequence[i] = 0;
      if (i == 0) return;
    }
  }
}

std::vector<BranchRecord> enumerate_branches(const RepeatedExperiment& exp) {
  require_enumerable(exp);
  std::vector<BranchRecord> out;
  for_each_branch(exp, [&](const BranchRecord& r) { out.push_back(r); });
  return out;
}

std::vector<double> aggregate_by_count(const RepeatedExperiment& exp,
                                       std::span<const BranchRecord> records) {
  std::vector<double> out(exp.repetitions() + 1, 0.0);
  for (const auto& r : records) {
    if (r.sequence.size() != exp.repetitions()) {
      throw std::invalid_argument("aggregate_by_count: sequence length does not match N");
    }
    out[r.count_of(exp.focus_position())] += r.presence;
  }
  return out;
}

}  // namespace bornlab::branching
