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
#include <string>
#include <utility>
#include <vector>

#include "bornlab/branching/counts.hpp"

namespace bornlab::decision {

using branching::CountDistribution;

// Quasi-credences over outcome labels, summing to one.
class WeightAssignment {
 public:
  explicit WeightAssignment(std::vector<std::pair<std::string, double>> weights);

  const std::vector<std::pair<std::string, double>>& entries() const { return weights_; }
  // Throws std::out_of_range for an unknown label.
  double weight(const std::string& label) const;

 private:
  std::vector<std::pair<std::string, double>> weights_;
};

// Payoff per outcome label. Only meaningful up to a positive affine map.
class UtilityAssignment {
 public:
  explicit UtilityAssignment(std::vector<std::pair<std::string, double>> utilities);

  const std::vector<std::pair<std::string, double>>& entries() const { return utilities_; }
  double utility(const std::string& label) const;

  // a * U + c for every outcome.
  UtilityAssignment affine(double scale, double shift) const;

 private:
  std::vector<std::pair<std::string, double>> utilities_;
};

// Utility of a branch in which u was seen m times out of N.
using CountUtility = std::function<double(std::size_t m, std::size_t n)>;

struct Bet {
  std::string label;
  UtilityAssignment payoff_per_outcome;
};

// sum_b w(b) U_b. Throws std::invalid_argument unless both cover the same labels.
double expected_utility(const WeightAssignment& w, const UtilityAssignment& u);

// w(c|b) = w(c and b) / w(b).
double weight_update(double joint, double condition);

// Multiplicative weights over N independent branchings: C(N,m) w_u^m (1-w_u)^(N-m).
CountDistribution repeated_weight_distribution(double w_u, std::size_t repetitions);

// sum_m w(m:N|u) cu(m, N).
double repeated_expected_utility(double w_u, std::size_t repetitions, const CountUtility& cu);

struct MismatchReport {
  double presence_in_weight_window;  // presence mass where the weights peak
  double weight_in_presence_window;  // weight mass where the presence peaks
  double overlap;                    // sum_m min(rho(m), w(m))
  // Inclusive count windows [lo, hi] of +-window_sigmas standard deviations.
  std::pair<double, double> weight_window;
  std::pair<double, double> presence_window;
};

inline constexpr double kDefaultWindowSigmas = 3.0;

// Compares where an agent with weight w_u expects to be against where the
// presence rho_u actually puts her, both as exact binomials over m.
MismatchReport mismatch_report(double rho_u, double w_u, std::size_t repetitions,
                               double window_sigmas = kDefaultWindowSigmas);

// Label of the bet with the largest expected utility. Ties go to the earlier
// bet in the list. Throws std::invalid_argument for an empty list.
std::string choose(const WeightAssignment& w, const std::vector<Bet>& bets);

}  // namespace bornlab::decision
