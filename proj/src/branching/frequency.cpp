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

#include "bornlab/branching/frequency.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace bornlab::branching {
namespace {

constexpr double kEdgeSlack = 1e-9;

void require_nondegenerate(double rho_u, const char* what) {
  if (!(rho_u > 0.0 && rho_u < 1.0)) {
    throw std::domain_error(std::string(what) +
                            ": rho_u must lie strictly inside (0, 1); the Gaussian form is "
                            "degenerate here, use count_distribution for the exact values");
  }
}

void require_delta_z(double delta_z) {
  if (!(delta_z > 0.0 && delta_z <= 1.0)) {
    throw std::invalid_argument("delta_z must lie in (0, 1]");
  }
}

}  // namespace

double gaussian_approx(const RepeatedExperiment& exp, double m) {
  require_nondegenerate(exp.rho_u(), "gaussian_approx");
  const double n = static_cast<double>(exp.repetitions());
  const double var = n * exp.rho_u() * exp.rho_not_u();
  const double d = m - n * exp.rho_u();
  return std::exp(-d * d / (2.0 * var)) / std::sqrt(2.0 * std::numbers::pi * var);
}

FrequencyDensity::FrequencyDensity(double rho_u, double rho_not_u, std::size_t repetitions)
    : rho_u_(rho_u), rho_not_u_(rho_not_u), repetitions_(repetitions) {
  require_nondegenerate(rho_u_, "frequency_density");
  if (repetitions_ == 0) throw std::invalid_argument("frequency_density needs N >= 1");
}

double FrequencyDensity::operator()(double z) const {
  const double n = static_cast<double>(repetitions_);
  const double spread = rho_u_ * rho_not_u_;
  const double d = z - rho_u_;
  return std::sqrt(n / (2.0 * std::numbers::pi * spread)) * std::exp(-n * d * d / (2.0 * spread));
}

double FrequencyDensity::peak_height() const { return (*this)(rho_u_); }

double FrequencyDensity::standard_deviation() const {
  return std::sqrt(rho_u_ * rho_not_u_ / static_cast<double>(repetitions_));
}

double FrequencyDensity::integral() const {
  // At least 50 nodes per standard deviation.
  const double sigma = standard_deviation();
  const auto intervals = static_cast<std::size_t>(
      std::max(20000.0, std::ceil(50.0 / sigma)));
  const double h = 1.0 / static_cast<double>(intervals);
  double sum = 0.5 * ((*this)(0.0) + (*this)(1.0));
  for (std::size_t i = 1; i < intervals; ++i) sum += (*this)(static_cast<double>(i) * h);
  return sum * h;
}

FrequencyDensity frequency_density(const RepeatedExperiment& exp) {
  return FrequencyDensity(exp.rho_u(), exp.rho_not_u(), exp.repetitions());
}

IntervalPartition::IntervalPartition(double rho_u, double delta_z)
    : rho_u_(rho_u), delta_z_(delta_z) {
  if (!(rho_u >= 0.0 && rho_u <= 1.0)) throw std::invalid_argument("rho_u must lie in [0, 1]");
  require_delta_z(delta_z);
  k_min_ = bin_from_offset((0.0 - rho_u_) / delta_z_ + 0.5, false);
  k_max_ = bin_from_offset((1.0 - rho_u_) / delta_z_ + 0.5, true);
}

int IntervalPartition::bin_from_offset(double t, bool at_one) const {
  // t = (z - rho_u)/dz + 1/2; bin k holds t in [k, k + 1).
  const double nearest = std::nearbyint(t);
  if (std::abs(t - nearest) <= kEdgeSlack) {
    // On an edge: left-closed bins take it, except z = 1 which stays in the
    // bin it closes.
    return static_cast<int>(nearest) - (at_one ? 1 : 0);
  }
  return static_cast<int>(std::floor(t));
}

int IntervalPartition::bin_of(double z) const {
  if (!(z >= 0.0 && z <= 1.0)) throw std::out_of_range("bin_of: z outside [0, 1]");
  return bin_from_offset((z - rho_u_) / delta_z_ + 0.5, z == 1.0);
}

int IntervalPartition::bin_of_count(std::size_t m, std::size_t repetitions) const {
  if (m > repetitions || repetitions == 0) throw std::out_of_range("bin_of_count: m > N");
  const double n = static_cast<double>(repetitions);
  const double t = (static_cast<double>(m) - n * rho_u_) / (n * delta_z_) + 0.5;
  return bin_from_offset(t, m == repetitions);
}

Interval IntervalPartition::interval(int k) const {
  if (k < k_min_ || k > k_max_) throw std::out_of_range("interval index outside partition");
  const double center = rho_u_ + k * delta_z_;
  return {k, center, std::max(0.0, center - 0.5 * delta_z_),
          std::min(1.0, center + 0.5 * delta_z_)};
}

std::vector<Interval> IntervalPartition::intervals() const {
  std::vector<Interval> out;
  for (int k = k_min_; k <= k_max_; ++k) out.push_back(interval(k));
  return out;
}

HistogramDensity::HistogramDensity(IntervalPartition partition, std::vector<double> masses)
    : partition_(partition), masses_(std::move(masses)) {
  if (masses_.size() != partition_.size()) {
    throw std::invalid_argument("histogram: one mass per interval required");
  }
}

double HistogramDensity::mass(int k) const {
  if (k < partition_.k_min() || k > partition_.k_max()) return 0.0;
  return masses_[static_cast<std::size_t>(k - partition_.k_min())];
}

double HistogramDensity::operator()(double z) const {
  return mass(partition_.bin_of(z)) / partition_.delta_z();
}

HistogramDensity histogram_density(const RepeatedExperiment& exp, double delta_z) {
  IntervalPartition partition(exp.rho_u(), delta_z);
  const auto counts = count_distribution(exp);
  std::vector<double> masses(partition.size(), 0.0);
  const std::size_t n = exp.repetitions();
  for (std::size_t m = 0; m <= n; ++m) {
    const int k = partition.bin_of_count(m, n);
    masses[static_cast<std::size_t>(k - partition.k_min())] += counts[m];
  }
  return HistogramDensity(partition, std::move(masses));
}

ChebyshevTail chebyshev_tail(const RepeatedExperiment& exp, double delta_z) {
  require_nondegenerate(exp.rho_u(), "chebyshev_tail");
  require_delta_z(delta_z);
  const auto counts = count_distribution(exp);
  const double n = static_cast<double>(exp.repetitions());
  const double half_width = 0.5 * delta_z * n;  // in units of m
  double tail = 0.0;
  for (std::size_t m = 0; m < counts.size(); ++m) {
    const double excess = std::abs(static_cast<double>(m) - n * exp.rho_u()) - half_width;
    if (excess > kEdgeSlack * std::max(1.0, n * delta_z)) tail += counts[m];
  }
  return {tail, 4.0 * exp.rho_u() * exp.rho_not_u() / (delta_z * delta_z * n)};
}

std::vector<std::pair<double, double>> coarse_frequency_operator_density(
    const RepeatedExperiment& exp, double delta_z) {
  const auto hist = histogram_density(exp, delta_z);
  std::vector<std::pair<double, double>> bars;
  for (const auto& iv : hist.partition().intervals()) bars.emplace_back(iv.center, hist.mass(iv.k));
  return bars;
}

}  // namespace bornlab::branching
