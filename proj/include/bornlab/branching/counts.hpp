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
#include <vector>

#include "bornlab/branching/experiment.hpp"

namespace bornlab::branching {

// Distribution over m = 0..N of the number of focus outcomes.
class CountDistribution {
 public:
  explicit CountDistribution(std::vector<double> values);

  std::size_t repetitions() const { return values_.size() - 1; }
  std::size_t size() const { return values_.size(); }
  const std::vector<double>& values() const { return values_; }
  double operator[](std::size_t m) const { return values_[m]; }

  double mean() const;
  double variance() const;

 private:
  std::vector<double> values_;
};

// Up to this N the binomial terms are formed directly; above it in log space.
inline constexpr std::size_t kDirectBinomialLimit = 30;

// C(N, m) p^m q^(N-m) for m = 0..N. `q` is passed separately so callers that
// sum several outcomes into not-u keep that sum exactly.
CountDistribution binomial_distribution(double p, double q, std::size_t repetitions);

// Presence of the branches in which u was seen m times out of N.
CountDistribution count_distribution(const RepeatedExperiment& exp);

}  // namespace bornlab::branching
