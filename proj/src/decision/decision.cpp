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

#include "bornlab/decision/decision.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "bornlab/tolerances.hpp"

namespace bornlab::decision {
namespace {

template <typename Entries>
double lookup(const Entries& entries, const std::string& label) {
  for (const auto& [name, value] : entries) {
    if (name == label) return value;
  }
  throw std::out_of_range("no outcome labelled '" + label + "'");
}

template <typename Entries>
void require_unique_labels(const Entries& entries) {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    for (std::size_t j = i + 1; j < entries.size(); ++j) {
      if (entries[i].first == entries[j].first) {
        throw std::invalid_argument("duplicate outcome label '" + entries[i].first + "'");
      }
    }
  }
}

double window_mass(const CountDistribution& dist, std::pair<double, double> window) {
  double mass = 0.0;
  for (std::size_t m = 0; m < dist.size(); ++m) {
    const double x = static_cast<double>(m);
    if (x >= window.first && x <= window.second) mass += dist[m];
  }
  return mass;
}

std::pair<double, double> count_window(double p, std::size_t repetitions, double sigmas) {
  const double n = static_cast<double>(repetitions);
  const double half = sigmas * std::sqrt(n * p * (1.0 - p));
  return {n * p - half, n * p + half};
}

}  // namespace

WeightAssignment::WeightAssignment(std::vector<std::pair<std::string, double>> weights)
    : weights_(std::move(weights)) {
  if (weights_.empty()) throw std::invalid_argument("weight assignment needs an outcome");
  require_unique_labels(weights_);
  double total = 0.0;
  for (const auto& [label, w] : weights_) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw std::invalid_argument("weight of '" + label + "' must be finite and non-negative");
    }
    total += w;
  }
  if (std::abs(total - 1.0) > tol::kWeightSum) {
    throw std::invalid_argument("weights sum to " + std::to_string(total) + ", not 1");
  }
}

double WeightAssignment::weight(const std::string& label) const { return lookup(weights_, label); }

UtilityAssignment::UtilityAssignment(std::vector<std::pair<std::string, double>> utilities)
    : utilities_(std::move(utilities)) {
  if (utilities_.empty()) throw std::invalid_argument("utility assignment needs an outcome");
  require_unique_labels(utilities_);
  for (const auto& [label, u] : utilities_) {
    if (!std::isfinite(u)) throw std::invalid_argument("utility of '" + label + "' is not finite");
  }
}

double UtilityAssignment::utility(const std::string& label) const {
  return lookup(utilities_, label);
}

UtilityAssignment UtilityAssignment::affine(double scale, double shift) const {
  auto out = utilities_;
  for (auto& entry : out) entry.second = scale * entry.second + shift;
  return UtilityAssignment(std::move(out));
}

double expected_utility(const WeightAssignment& w, const UtilityAssignment& u) {
  if (w.entries().size() != u.entries().size()) {
    throw std::invalid_argument("expected_utility: weights and utilities cover different outcomes");
  }
  double total = 0.0;
  for (const auto& [label, weight] : w.entries()) {
    double utility = 0.0;
    try {
      utility = u.utility(label);
    } catch (const std::out_of_range&) {
      throw std::invalid_argument("expected_utility: no utility for outcome '" + label + "'");
    }
    total += weight * utility;
  }
  return total;
}

double weight_update(double joint, double condition) {
  if (!(condition > 0.0)) throw std::domain_error("weight_update: condition has zero weight");
  if (!(joint >= 0.0) || joint > condition * (1.0 + 1e-12)) {
    throw std::invalid_argument("weight_update: need 0 <= w(c and b) <= w(b)");
  }
  if (joint == condition) return 1.0;
  return std::min(1.0, joint / condition);
}

CountDistribution repeated_weight_distribution(double w_u, std::size_t repetitions) {
  if (!(w_u >= 0.0 && w_u <= 1.0)) throw std::invalid_argument("w_u must lie in [0, 1]");
  return branching::binomial_distribution(w_u, 1.0 - w_u, repetitions);
}

double repeated_expected_utility(double w_u, std::size_t repetitions, const CountUtility& cu) {
  const auto weights = repeated_weight_distribution(w_u, repetitions);
  double total = 0.0;
  for (std::size_t m = 0; m < weights.size(); ++m) {
    if (weights[m] == 0.0) continue;
    const double value = cu(m, repetitions);
    if (!std::isfinite(value)) throw std::invalid_argument("count utility must be finite");
    total += weights[m] * value;
  }
  return total;
}

MismatchReport mismatch_report(double rho_u, double w_u, std::size_t repetitions,
                               double window_sigmas) {
  if (!(rho_u > 0.0 && rho_u < 1.0) || !(w_u > 0.0 && w_u < 1.0)) {
    throw std::invalid_argument("mismatch_report: rho_u and w_u must lie in (0, 1)");
  }
  if (!(window_sigmas > 0.0)) throw std::invalid_argument("window width must be positive");
  const auto presence = branching::binomial_distribution(rho_u, 1.0 - rho_u, repetitions);
  const auto weights = repeated_weight_distribution(w_u, repetitions);

  MismatchReport report{};
  report.weight_window = count_window(w_u, repetitions, window_sigmas);
  report.presence_window = count_window(rho_u, repetitions, window_sigmas);
  report.presence_in_weight_window = window_mass(presence, report.weight_window);
  report.weight_in_presence_window = window_mass(weights, report.presence_window);
  double overlap = 0.0;
  for (std::size_t m = 0; m < presence.size(); ++m) overlap += std::min(presence[m], weights[m]);
  report.overlap = overlap;
  return report;
}

std::string choose(const WeightAssignment& w, const std::vector<Bet>& bets) {
  if (bets.empty()) throw std::invalid_argument("choose: no bets offered");
  std::size_t best = 0;
  double best_value = expected_utility(w, bets[0].payoff_per_outcome);
  for (std::size_t i = 1; i < bets.size(); ++i) {
    const double value = expected_utility(w, bets[i].payoff_per_outcome);
    if (value > best_value) {
      best = i;
      best_value = value;
    }
  }
  return bets[best].label;
}

}  // namespace bornlab::decision
