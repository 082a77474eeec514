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

#include "bornlab/branching/sampling.hpp"

#include <random>

namespace bornlab::branching {

BranchRecord sample_branch(const RepeatedExperiment& exp, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  const auto& p = exp.outcome_presences();
  const std::size_t d = p.size();

  std::vector<double> cumulative(d);
  std::size_t last_positive = 0;
  double acc = 0.0;
  for (std::size_t b = 0; b < d; ++b) {
    acc += p[b];
    cumulative[b] = acc;
    if (p[b] > 0.0) last_positive = b;
  }

  BranchRecord record;
  record.sequence.resize(exp.repetitions());
  record.presence = 1.0;
  for (auto& outcome : record.sequence) {
    const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
    std::size_t b = last_positive;
    for (std::size_t i = 0; i < d; ++i) {
      if (p[i] > 0.0 && u < cumulative[i]) {
        b = i;
        break;
      }
    }
    outcome = b;
    record.presence *= p[b];
  }
  return record;
}

}  // namespace bornlab::branching
