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
#include <utility>
#include <vector>

#include "bornlab/branching/counts.hpp"
#include "bornlab/branching/experiment.hpp"

namespace bornlab::branching {

// Normal approximation to the count distribution at m. Throws
// std::domain_error for rho_u in {0, 1}; use count_distribution there.
double gaussian_approx(const RepeatedExperiment& exp, double m);

// Continuous presence density of the relative frequency z = m/N.
class FrequencyDensity {
 public:
  FrequencyDensity(double rho_u, double rho_not_u, std::size_t repetitions);

  double operator()(double z) const;

  double center() const { return rho_u_; }
  double peak_height() const;
  double standard_deviation() const;
  std::size_t repetitions() const { return repetitions_; }

  // Trapezoid integral over [0, 1]. Falls short of 1 when the Gaussian tails
  // reach past the boundaries; 1 - integral() is the truncation deficit.
  double integral() const;

 private:
  double rho_u_;
  double rho_not_u_;
  std::size_t repetitions_;
};

// Throws std::domain_error for rho_u in {0, 1}.
FrequencyDensity frequency_density(const RepeatedExperiment& exp);

struct Interval {
  int k;
  double center;  // nominal centre rho_u + k dz, may lie outside [0, 1]
  double lo;      // clipped to [0, 1]
  double hi;
};

// Cover of [0, 1] by intervals [z_k - dz/2, z_k + dz/2) with z_k = rho_u + k dz,
// clipped to [0, 1]. When the last interval's right edge lands exactly on 1 it
// is closed there instead of adding a bin holding only the point 1.
class IntervalPartition {
 public:
  IntervalPartition(double rho_u, double delta_z);

  double delta_z() const { return delta_z_; }
  double rho_u() const { return rho_u_; }
  int k_min() const { return k_min_; }
  int k_max() const { return k_max_; }
  std::size_t size() const { return static_cast<std::size_t>(k_max_ - k_min_ + 1); }

  Interval interval(int k) const;
  std::vector<Interval> intervals() const;

  // Bin holding z in [0, 1]. Points within 1e-9 bin widths of an edge are
  // treated as lying on it.
  int bin_of(double z) const;
  // Bin of m/N, computed from the integer count to keep edges exact.
  int bin_of_count(std::size_t m, std::size_t repetitions) const;

 private:
  int bin_from_offset(double t, bool at_one) const;

  double rho_u_;
  double delta_z_;
  int k_min_;
  int k_max_;
};

// Piecewise-constant density rho~(k) / dz on an interval partition.
class HistogramDensity {
 public:
  HistogramDensity(IntervalPartition partition, std::vector<double> masses);

  const IntervalPartition& partition() const { return partition_; }
  // rho~(k) for k = k_min..k_max.
  const std::vector<double>& masses() const { return masses_; }
  double mass(int k) const;
  // Nominal dz divisor, also on clipped boundary bins.
  double operator()(double z) const;

 private:
  IntervalPartition partition_;
  std::vector<double> masses_;
};

// Exact binomial mass aggregated into bins of width delta_z, 0 < delta_z <= 1.
HistogramDensity histogram_density(const RepeatedExperiment& exp, double delta_z);

struct ChebyshevTail {
  double exact_tail;  // mass with |m/N - rho_u| > dz/2
  double bound;       // 4 rho_u rho_not_u / (dz^2 N)
};

ChebyshevTail chebyshev_tail(const RepeatedExperiment& exp, double delta_z);

// Spectrum of the coarse-grained frequency operator: bars (z_k, rho~(k)).
std::vector<std::pair<double, double>> coarse_frequency_operator_density(
    const RepeatedExperiment& exp, double delta_z);

}  // namespace bornlab::branching
