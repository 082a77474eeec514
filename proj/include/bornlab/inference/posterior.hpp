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

namespace bornlab::inference {

// Observed relative frequency z after N repetitions.
class Observation {
 public:
  Observation(double z, std::size_t repetitions);
  // z = m / N.
  static Observation from_counts(std::size_t m, std::size_t repetitions);

  double z() const { return z_; }
  std::size_t repetitions() const { return repetitions_; }

 private:
  double z_;
  std::size_t repetitions_;
};

// Prior density over candidate single-event probabilities, sampled on an
// ascending grid in [0, 1] and normalized under the trapezoid rule.
class Prior {
 public:
  Prior(std::vector<double> grid, std::vector<double> weights);

  // Flat density on 0, step, 2 step, ..., 1.
  static Prior uniform(double step = 1e-3);

  const std::vector<double>& grid() const { return grid_; }
  const std::vector<double>& weights() const { return weights_; }

 private:
  std::vector<double> grid_;
  std::vector<double> weights_;
};

class Posterior {
 public:
  Posterior(std::vector<double> grid, std::vector<double> densities, double log_normalizer);

  const std::vector<double>& grid() const { return grid_; }
  const std::vector<double>& densities() const { return densities_; }
  // Evidence: trapezoid integral of likelihood times prior. Kept as a log
  // because it underflows for large N even when the densities are fine.
  double log_normalizer() const { return log_normalizer_; }
  double normalizer() const;

  double integral() const;
  // Grid point of largest density (first one on ties).
  double mode() const;
  double mean() const;
  double standard_deviation() const;

  // Probability carried by each grid point under the trapezoid rule.
  std::vector<double> cell_masses() const;

 private:
  std::vector<double> grid_;
  std::vector<double> densities_;
  double log_normalizer_;
};

// Gaussian likelihood of observing z given single-event probability p. Throws
// std::domain_error for p outside (0, 1).
double likelihood(double p, const Observation& obs);
double log_likelihood(double p, const Observation& obs);

// Exact binomial counterpart, as a density in z: N C(N, m) p^m (1-p)^(N-m)
// with m = zN. Requires zN to be an integer.
double binomial_likelihood(double p, const Observation& obs);

// Likelihood times prior on the prior's grid, normalized by the trapezoid rule.
// Products are formed in log space. Grid points p = 0 and p = 1 get density 0.
// Throws std::domain_error when the evidence vanishes.
Posterior posterior(const Prior& prior, const Observation& obs);

// P(A|B) = P(A and B) / P(B).
double bayes_update(double joint_ab, double total_b);

struct CredibleInterval {
  double lo;
  double hi;
  double mass;   // posterior mass actually enclosed
  bool reached;  // false when the requested mass could not be enclosed
};

// Shortest interval [grid[i], grid[j]] whose cell masses sum to at least
// `mass`; ties go to the leftmost interval. If the grid cannot reach `mass`,
// the full grid is returned with reached = false.
CredibleInterval credible_interval(const Posterior& post, double mass);

}  // namespace bornlab::inference
