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

#include "bornlab/inference/posterior.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "bornlab/tolerances.hpp"

namespace bornlab::inference {
namespace {

constexpr double kMassSlack = 1e-12;

void require_grid(const std::vector<double>& grid, std::size_t values) {
  if (grid.size() < 2) throw std::invalid_argument("grid needs at least two points");
  if (grid.size() != values) throw std::invalid_argument("grid and values differ in length");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] >= 0.0 && grid[i] <= 1.0)) throw std::invalid_argument("grid point outside [0, 1]");
    if (i > 0 && !(grid[i] > grid[i - 1])) throw std::invalid_argument("grid must be ascending");
  }
}

std::vector<double> trapezoid_cells(const std::vector<double>& grid) {
  std::vector<double> cells(grid.size(), 0.0);
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    const double half = 0.5 * (grid[i + 1] - grid[i]);
    cells[i] += half;
    cells[i + 1] += half;
  }
  return cells;
}

double trapezoid(const std::vector<double>& grid, const std::vector<double>& f) {
  const auto cells = trapezoid_cells(grid);
  double sum = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) sum += cells[i] * f[i];
  return sum;
}

void require_open_unit(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::domain_error("likelihood: p must lie strictly inside (0, 1), got " +
                            std::to_string(p));
  }
}

}  // namespace

Observation::Observation(double z, std::size_t repetitions) : z_(z), repetitions_(repetitions) {
  if (!(z >= 0.0 && z <= 1.0)) throw std::invalid_argument("observed frequency must lie in [0, 1]");
  if (repetitions == 0) throw std::invalid_argument("observation needs N >= 1");
}

Observation Observation::from_counts(std::size_t m, std::size_t repetitions) {
  if (repetitions == 0 || m > repetitions) throw std::invalid_argument("need 0 <= m <= N, N >= 1");
  return Observation(static_cast<double>(m) / static_cast<double>(repetitions), repetitions);
}

Prior::Prior(std::vector<double> grid, std::vector<double> weights)
    : grid_(std::move(grid)), weights_(std::move(weights)) {
  require_grid(grid_, weights_.size());
  for (double w : weights_) {
    if (!(w >= 0.0) || !std::isfinite(w)) throw std::invalid_argument("prior weights must be >= 0");
  }
  const double total = trapezoid(grid_, weights_);
  if (std::abs(total - 1.0) > tol::kPriorIntegral) {
    throw std::invalid_argument("prior integrates to " + std::to_string(total) + ", not 1");
  }
}

Prior Prior::uniform(double step) {
  if (!(step > 0.0 && step <= 0.5)) throw std::invalid_argument("grid step must lie in (0, 0.5]");
  const auto intervals = static_cast<std::size_t>(std::llround(1.0 / step));
  if (std::abs(static_cast<double>(intervals) * step - 1.0) > 1e-9) {
    throw std::invalid_argument("grid step must divide [0, 1] evenly");
  }
  std::vector<double> grid(intervals + 1);
  for (std::size_t i = 0; i <= intervals; ++i) {
    grid[i] = static_cast<double>(i) / static_cast<double>(intervals);
  }
  return Prior(std::move(grid), std::vector<double>(intervals + 1, 1.0));
}

Posterior::Posterior(std::vector<double> grid, std::vector<double> densities,
                     double log_normalizer)
    : grid_(std::move(grid)), densities_(std::move(densities)), log_normalizer_(log_normalizer) {
  require_grid(grid_, densities_.size());
  for (double v : densities_) {
    if (!(v >= 0.0) || !std::isfinite(v)) throw std::invalid_argument("posterior densities must be >= 0");
  }
  if (!std::isfinite(log_normalizer_)) throw std::invalid_argument("posterior normalizer must be positive");
  if (std::abs(integral() - 1.0) > tol::kPosteriorIntegral) {
    throw std::invalid_argument("posterior does not integrate to 1");
  }
}

double Posterior::normalizer() const { return std::exp(log_normalizer_); }

double Posterior::integral() const { return trapezoid(grid_, densities_); }

double Posterior::mode() const {
  const auto it = std::max_element(densities_.begin(), densities_.end());
  return grid_[static_cast<std::size_t>(it - densities_.begin())];
}

std::vector<double> Posterior::cell_masses() const {
  auto cells = trapezoid_cells(grid_);
  for (std::size_t i = 0; i < cells.size(); ++i) cells[i] *= densities_[i];
  return cells;
}

double Posterior::mean() const {
  std::vector<double> f(grid_.size());
  for (std::size_t i = 0; i < f.size(); ++i) f[i] = grid_[i] * densities_[i];
  return trapezoid(grid_, f);
}

double Posterior::standard_deviation() const {
  const double mu = mean();
  std::vector<double> f(grid_.size());
  for (std::size_t i = 0; i < f.size(); ++i) f[i] = (grid_[i] - mu) * (grid_[i] - mu) * densities_[i];
  return std::sqrt(trapezoid(grid_, f));
}

double log_likelihood(double p, const Observation& obs) {
  require_open_unit(p);
  const double n = static_cast<double>(obs.repetitions());
  const double spread = p * (1.0 - p);
  const double d = obs.z() - p;
  return 0.5 * std::log(n / (2.0 * std::numbers::pi * spread)) - n * d * d / (2.0 * spread);
}

double likelihood(double p, const Observation& obs) {
  require_open_unit(p);
  const double n = static_cast<double>(obs.repetitions());
  const double spread = p * (1.0 - p);
  const double d = obs.z() - p;
  return std::sqrt(n / (2.0 * std::numbers::pi * spread)) * std::exp(-n * d * d / (2.0 * spread));
}

double binomial_likelihood(double p, const Observation& obs) {
  require_open_unit(p);
  const double n = static_cast<double>(obs.repetitions());
  const double m = std::nearbyint(obs.z() * n);
  if (std::abs(obs.z() * n - m) > 1e-9) {
    throw std::invalid_argument("binomial_likelihood: zN is not an integer");
  }
  const double log_pmf = std::lgamma(n + 1.0) - std::lgamma(m + 1.0) - std::lgamma(n - m + 1.0) +
                         m * std::log(p) + (n - m) * std::log1p(-p);
  return n * std::exp(log_pmf);
}

Posterior posterior(const Prior& prior, const Observation& obs) {
  const auto& grid = prior.grid();
  const auto& weights = prior.weights();
  const double minus_inf = -std::numeric_limits<double>::infinity();

  std::vector<double> log_terms(grid.size(), minus_inf);
  double peak = minus_inf;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (weights[i] <= 0.0 || grid[i] <= 0.0 || grid[i] >= 1.0) continue;
    log_terms[i] = log_likelihood(grid[i], obs) + std::log(weights[i]);
    peak = std::max(peak, log_terms[i]);
  }
  if (peak == minus_inf) {
    throw std::domain_error("posterior: zero evidence; the prior puts no weight where the "
                            "likelihood is defined");
  }

  std::vector<double> scaled(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) scaled[i] = std::exp(log_terms[i] - peak);
  const double scaled_evidence = trapezoid(grid, scaled);
  if (!(scaled_evidence > 0.0) || !std::isfinite(scaled_evidence)) {
    throw std::domain_error("posterior: evidence integral vanished on this grid (a single "
                            "supported point has zero trapezoid width)");
  }
  for (double& v : scaled) v /= scaled_evidence;
  return Posterior(grid, std::move(scaled), peak + std::log(scaled_evidence));
}

double bayes_update(double joint_ab, double total_b) {
  if (!(total_b > 0.0)) throw std::domain_error("bayes_update: cannot condition on a null event");
  if (!(joint_ab >= 0.0) || joint_ab > total_b * (1.0 + 1e-12)) {
    throw std::invalid_argument("bayes_update: need 0 <= P(A and B) <= P(B)");
  }
  return std::min(1.0, joint_ab / total_b);
}

CredibleInterval credible_interval(const Posterior& post, double mass) {
  if (!(mass > 0.0 && mass < 1.0)) throw std::invalid_argument("credible mass must lie in (0, 1)");
  const auto& grid = post.grid();
  const auto cells = post.cell_masses();
  const std::size_t n = grid.size();
  std::vector<double> cum(n + 1, 0.0);
  for (std::size_t i = 0; i < n; ++i) cum[i + 1] = cum[i] + cells[i];

  if (cum[n] < mass - kMassSlack) return {grid.front(), grid.back(), cum[n], false};

  CredibleInterval best{grid.front(), grid.back(), cum[n], true};
  double best_width = std::numeric_limits<double>::infinity();
  std::size_t j = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (j < i) j = i;
    while (j < n && cum[j + 1] - cum[i] < mass - kMassSlack) ++j;
    if (j == n) break;
    const double width = grid[j] - grid[i];
    // Widths equal up to rounding count as ties, which keep the leftmost.
    if (width < best_width - 1e-9 * (grid.back() - grid.front())) {
      best_width = width;
      best = {grid[i], grid[j], cum[j + 1] - cum[i], true};
    }
  }
  return best;
}

}  // namespace bornlab::inference
