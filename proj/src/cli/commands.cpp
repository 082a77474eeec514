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

#include <algorithm>
#include <cmath>
#include <numbers>

#include "bornlab/branching/counts.hpp"
#include "bornlab/branching/frequency.hpp"
#include "bornlab/branching/operators.hpp"
#include "bornlab/branching/sampling.hpp"
#include "bornlab/cli/cli.hpp"
#include "bornlab/decision/decision.hpp"
#include "bornlab/inference/posterior.hpp"
#include "bornlab/quantum/joint_state.hpp"
#include "bornlab/quantum/state.hpp"

namespace bornlab::cli {
namespace {

using branching::RepeatedExperiment;

double default_delta_z(std::size_t n) {
  return std::min(1.0, 0.5 / std::sqrt(static_cast<double>(n)));
}

Table run_frequency(const RunConfig& c) {
  const auto exp = RepeatedExperiment::binary(c.rho_u, c.n);
  const double delta_z = c.delta_z.value_or(default_delta_z(c.n));
  const auto counts = branching::count_distribution(exp);
  const auto density = branching::frequency_density(exp);
  const auto hist = branching::histogram_density(exp, delta_z);
  const double n = static_cast<double>(c.n);

  Table t;
  if (c.table == "counts") {
    t.columns = {"m", "exact", "gaussian"};
    for (std::size_t m = 0; m <= c.n; ++m) {
      const double md = static_cast<double>(m);
      t.rows.push_back({md, counts[m], branching::gaussian_approx(exp, md)});
    }
  } else if (c.table == "bars") {
    t.columns = {"z_k", "rho_tilde"};
    for (const auto& [zk, mass] : branching::coarse_frequency_operator_density(exp, delta_z)) {
      t.rows.push_back({zk, mass});
    }
  } else {
    t.columns = {"z", "presence_density", "gaussian_density", "histogram_density"};
    for (std::size_t m = 0; m <= c.n; ++m) {
      const double z = static_cast<double>(m) / n;
      t.rows.push_back({z, n * counts[m], density(z), hist(z)});
    }
  }

  // Peak of the Gaussian column over the z = m/N rows.
  std::size_t peak_m = 0;
  for (std::size_t m = 1; m <= c.n; ++m) {
    if (density(static_cast<double>(m) / n) > density(static_cast<double>(peak_m) / n)) peak_m = m;
  }
  const double peak_z = static_cast<double>(peak_m) / n;
  t.summary["delta_z"] = delta_z;
  t.summary["peak_z"] = peak_z;
  t.summary["peak_gaussian_density"] = density(peak_z);
  t.summary["peak_presence_density"] = n * counts[peak_m];
  t.summary["standard_deviation"] = density.standard_deviation();
  t.summary["histogram_bins"] = hist.partition().size();
  return t;
}

Table run_chebyshev(const RunConfig& c) {
  const auto base = RepeatedExperiment::binary(c.rho_u, c.n);
  const double delta_z = c.delta_z.value_or(0.1);
  std::vector<std::size_t> sizes;
  for (std::size_t n = 10; n < c.n; n *= 10) sizes.push_back(n);
  sizes.push_back(c.n);

  Table t;
  t.columns = {"n", "exact_tail", "bound", "finkelstein_norm"};
  for (std::size_t n : sizes) {
    const auto exp = base.with_repetitions(n);
    const auto tail = branching::chebyshev_tail(exp, delta_z);
    t.rows.push_back({static_cast<double>(n), tail.exact_tail, tail.bound,
                      branching::finkelstein_norm(exp)});
  }
  const auto tail = branching::chebyshev_tail(base, delta_z);
  t.summary["delta_z"] = delta_z;
  t.summary["exact_tail"] = tail.exact_tail;
  t.summary["bound"] = tail.bound;
  t.summary["bound_holds"] = tail.exact_tail <= tail.bound;
  t.summary["finkelstein_norm"] = branching::finkelstein_norm(base);
  return t;
}

Table run_posterior(const RunConfig& c) {
  Table t;
  double z = 0.0;
  if (c.z) {
    z = *c.z;
    t.summary["sampled"] = false;
  } else {
    const auto exp = RepeatedExperiment::binary(c.rho_u, c.n);
    const auto branch = branching::sample_branch(exp, *c.seed);
    const std::size_t m = branch.count_of(exp.focus_position());
    z = static_cast<double>(m) / static_cast<double>(c.n);
    t.summary["sampled"] = true;
    t.summary["sampled_count"] = m;
  }
  const auto prior = inference::Prior::uniform(c.grid_step.value_or(1e-3));
  const auto post = inference::posterior(prior, inference::Observation(z, c.n));
  const auto ci = inference::credible_interval(post, 0.95);

  t.columns = {"p", "posterior_density"};
  for (std::size_t i = 0; i < post.grid().size(); ++i) {
    t.rows.push_back({post.grid()[i], post.densities()[i]});
  }
  t.summary["z"] = z;
  t.summary["mode"] = post.mode();
  t.summary["mean"] = post.mean();
  t.summary["standard_deviation"] = post.standard_deviation();
  t.summary["ci95_lo"] = ci.lo;
  t.summary["ci95_hi"] = ci.hi;
  t.summary["ci95_mass"] = ci.mass;
  t.summary["log_evidence"] = post.log_normalizer();
  return t;
}

Table run_decision(const RunConfig& c) {
  const double w_u = *c.w_u;
  const auto presence = branching::binomial_distribution(c.rho_u, 1.0 - c.rho_u, c.n);
  const auto weights = decision::repeated_weight_distribution(w_u, c.n);
  const auto report = decision::mismatch_report(c.rho_u, w_u, c.n);
  const double n = static_cast<double>(c.n);

  Table t;
  t.columns = {"z", "presence_density", "weight_density"};
  for (std::size_t m = 0; m <= c.n; ++m) {
    t.rows.push_back({static_cast<double>(m) / n, n * presence[m], n * weights[m]});
  }
  t.summary["presence_in_weight_window"] = report.presence_in_weight_window;
  t.summary["weight_in_presence_window"] = report.weight_in_presence_window;
  t.summary["overlap"] = report.overlap;

  // Bet A pays twice the stake on u, bet B pays 1.5 times on not-u.
  const std::vector<decision::Bet> bets = {
      {"A", decision::UtilityAssignment({{"u", 2.0}, {"not-u", 0.0}})},
      {"B", decision::UtilityAssignment({{"u", 0.0}, {"not-u", 1.5}})},
  };
  const decision::WeightAssignment presence_weights({{"u", c.rho_u}, {"not-u", 1.0 - c.rho_u}});
  const decision::WeightAssignment agent_weights({{"u", w_u}, {"not-u", 1.0 - w_u}});
  t.summary["bet_a_expected_utility"] =
      decision::expected_utility(presence_weights, bets[0].payoff_per_outcome);
  t.summary["bet_b_expected_utility"] =
      decision::expected_utility(presence_weights, bets[1].payoff_per_outcome);
  t.summary["chosen_bet"] = decision::choose(presence_weights, bets);
  t.summary["chosen_bet_agent_weights"] = decision::choose(agent_weights, bets);
  return t;
}

Table run_evolve(const RunConfig& c) {
  const double duration = c.duration.value_or(std::numbers::pi / 2.0);
  Eigen::MatrixXcd sigma_x(2, 2);
  sigma_x << 0.0, 1.0, 1.0, 0.0;
  const quantum::HermitianOperator h(sigma_x);
  const auto initial =
      quantum::StateVector::normalized({std::sqrt(c.rho_u), std::sqrt(1.0 - c.rho_u)});

  Table t;
  t.columns = {"t", "presence_0", "presence_1", "norm_squared"};
  double worst = 0.0;
  for (std::size_t k = 0; k <= c.n; ++k) {
    const double time = duration * static_cast<double>(k) / static_cast<double>(c.n);
    const auto state = quantum::evolve(initial, h, time);
    const auto p = quantum::presence(state);
    worst = std::max(worst, std::abs(state.norm_squared() - 1.0));
    t.rows.push_back({time, p[0], p[1], state.norm_squared()});
  }
  t.summary["duration"] = duration;
  t.summary["max_norm_deviation"] = worst;
  return t;
}

Table run_decohere(const RunConfig& c) {
  const double g = c.overlap.value_or(0.9);
  const auto system =
      quantum::StateVector::normalized({std::sqrt(c.rho_u), std::sqrt(1.0 - c.rho_u)});
  const auto joint = quantum::JointState::from_system(system);

  Table t;
  t.columns = {"environment_qubits", "coherence", "closed_form", "purity"};
  const double amplitude = 2.0 * std::sqrt(c.rho_u * (1.0 - c.rho_u));
  double worst = 0.0;
  for (std::size_t k = 0; k <= c.n; ++k) {
    const auto rho = quantum::partial_trace(quantum::entangle_environment(joint, 0, k, g), 0);
    const double expected = amplitude * std::pow(std::abs(g), static_cast<double>(k));
    const double value = quantum::coherence(rho);
    worst = std::max(worst, std::abs(value - expected));
    t.rows.push_back({static_cast<double>(k), value, expected, rho.purity()});
  }
  t.summary["overlap"] = g;
  t.summary["max_abs_deviation"] = worst;
  return t;
}

}  // namespace

Table run(const RunConfig& config) {
  validate(config);
  switch (config.command) {
    case Command::kFrequency: return run_frequency(config);
    case Command::kChebyshev: return run_chebyshev(config);
    case Command::kPosterior: return run_posterior(config);
    case Command::kDecision: return run_decision(config);
    case Command::kEvolve: return run_evolve(config);
    case Command::kDecohere: return run_decohere(config);
  }
  throw UsageError("unknown command");
}

}  // namespace bornlab::cli
