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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits nonzero
// if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "bornlab/branching/counts.hpp"
#include "bornlab/branching/experiment.hpp"
#include "bornlab/branching/frequency.hpp"
#include "bornlab/branching/operators.hpp"
#include "bornlab/decision/decision.hpp"
#include "bornlab/inference/posterior.hpp"
#include "bornlab/quantum/joint_state.hpp"
#include "bornlab/quantum/state.hpp"
#include "oracles.hpp"

namespace {

using namespace bornlab;
using branching::RepeatedExperiment;
using quantum::Complex;

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0, double d = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, pattern, a, b, c, d);
  return buf;
}

double relative(double got, double want) { return std::abs(got - want) / std::abs(want); }

// 1. Enumeration aggregates to the closed-form count distribution.
Outcome oracle_equivalence() {
  const auto start = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (double rho : {0.1, 0.3, 0.5, 0.9}) {
    for (std::size_t n = 1; n <= 16; ++n) {
      const auto exp = RepeatedExperiment::binary(rho, n);
      const auto aggregated = branching::aggregate_by_count(exp, branching::enumerate_branches(exp));
      const auto closed = branching::count_distribution(exp);
      for (std::size_t m = 0; m <= n; ++m) worst = std::max(worst, relative(closed[m], aggregated[m]));
    }
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {worst < 1e-12 && seconds < 5.0,
          fmt("max relative deviation %.3g (limit 1e-12), runtime %.2f s (limit 5 s)", worst,
              seconds)};
}

// 2. Frequency density peak and histogram agreement.
Outcome frequency_reproduction() {
  const auto exp = RepeatedExperiment::binary(0.3, 1000);
  const auto density = branching::frequency_density(exp);
  const double want_height = std::sqrt(1000.0 / (2.0 * std::numbers::pi * 0.21));
  double argmax = 0.0, best = -1.0;
  for (int i = 0; i <= 100000; ++i) {
    const double z = i / 100000.0;
    if (density(z) > best) {
      best = density(z);
      argmax = z;
    }
  }
  const bool peak_ok = std::abs(argmax - 0.3) < 5e-4 && relative(density(0.3), want_height) < 1e-12;

  const double dz = 0.5 / std::sqrt(1000.0);
  const auto hist = branching::histogram_density(exp, dz);
  double worst = 0.0, worst_z = 0.0;
  std::size_t bins = 0;
  for (const auto& bin : hist.partition().intervals()) {
    const double mass = hist.mass(bin.k);
    if (mass < 0.01) continue;
    ++bins;
    const double err = relative(mass / dz, density(bin.center));
    if (err > worst) {
      worst = err;
      worst_z = bin.center;
    }
  }
  return {peak_ok && worst < 0.05,
          fmt("peak z %.4f height %.6f (want %.6f); ", argmax, density(0.3), want_height) +
              fmt("histogram max relative error %.4f at z %.4f over %.0f bins with mass >= 1%% "
                  "(limit 0.05)",
                  worst, worst_z, static_cast<double>(bins))};
}

// 3. Gaussian approximation against the exact binomial.
Outcome gaussian_accuracy() {
  const auto exp = RepeatedExperiment::binary(0.3, 1000);
  const auto exact = oracle::binomial_table(1000, 0.3, 0.7);
  const double peak_err = relative(branching::gaussian_approx(exp, 300.0), exact[300]);
  const double sigma = std::sqrt(210.0);
  double worst = 0.0, worst_m = 0.0;
  for (std::size_t m = 0; m <= 1000; ++m) {
    const double d = static_cast<double>(m) - 300.0;
    if (std::abs(d) > 3.0 * sigma) continue;
    const double err = relative(branching::gaussian_approx(exp, static_cast<double>(m)), exact[m]);
    if (err > worst) {
      worst = err;
      worst_m = static_cast<double>(m);
    }
  }
  return {peak_err < 0.01 && worst < 0.05,
          fmt("peak relative error %.5f (limit 0.01); max within 3 sigma %.4f at m=%.0f (limit "
              "0.05)",
              peak_err, worst, worst_m)};
}

// 4. Chebyshev bound on random triples and the reference instance.
Outcome chebyshev_bound() {
  std::mt19937_64 rng(20260101);
  std::uniform_real_distribution<double> rho_dist(0.01, 0.99), dz_dist(0.01, 0.5);
  std::uniform_real_distribution<double> log_n(1.0, 5.0);
  std::size_t violations = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const double rho = rho_dist(rng), dz = dz_dist(rng);
    const auto n = static_cast<std::size_t>(std::pow(10.0, log_n(rng)));
    const auto tail = branching::chebyshev_tail(RepeatedExperiment::binary(rho, n), dz);
    if (!(tail.exact_tail <= tail.bound)) ++violations;
  }
  const auto ref = branching::chebyshev_tail(RepeatedExperiment::binary(0.3, 1000), 0.1);
  const auto exact = oracle::binomial_table(1000, 0.3, 0.7);
  double oracle_tail = 0.0;
  for (std::size_t m = 0; m <= 1000; ++m) {
    if (std::abs(static_cast<long>(m) - 300) > 50) oracle_tail += exact[m];
  }
  const bool ref_ok = std::abs(ref.bound - 0.084) < 1e-12 && ref.exact_tail <= ref.bound &&
                      std::abs(ref.exact_tail - oracle_tail) < 1e-13;
  return {violations == 0 && ref_ok,
          fmt("%.0f violations in 100 random triples; reference bound %.6f exact tail %.6g "
              "(oracle %.6g)",
              static_cast<double>(violations), ref.bound, ref.exact_tail, oracle_tail)};
}

// 5. Finkelstein norm by dense operator application and its limit.
Outcome finkelstein_limit() {
  double worst = 0.0;
  for (std::size_t n = 1; n <= 10; ++n) {
    const auto exp = RepeatedExperiment::binary(0.3, n);
    const Eigen::VectorXcd psi = branching::product_state(exp);
    const Eigen::VectorXcd resid = oracle::dense_frequency_operator(n) * psi - 0.3 * psi;
    const double want = 0.21 / static_cast<double>(n);
    worst = std::max(worst, std::abs(resid.squaredNorm() - want));
    worst = std::max(worst, std::abs(branching::finkelstein_norm_explicit(exp) - want));
  }
  bool monotone = true;
  double prev = std::numeric_limits<double>::infinity(), last = 0.0;
  for (std::size_t n = 1; n <= 1000000; n *= 10) {
    last = branching::finkelstein_norm(RepeatedExperiment::binary(0.3, n));
    monotone = monotone && last < prev;
    prev = last;
  }
  return {worst < 1e-12 && monotone && last < 1e-6,
          fmt("max deviation N=1..10 %.3g (limit 1e-12); value at N=1e6 %.3g, monotone %.0f",
              worst, last, monotone ? 1.0 : 0.0)};
}

// 6. Posterior mode and 95% credible interval.
Outcome inferential_link() {
  const auto post =
      inference::posterior(inference::Prior::uniform(1e-3), inference::Observation(0.3, 1000));
  const auto ci = inference::credible_interval(post, 0.95);
  const double half = oracle::normal_quantile(0.975) * std::sqrt(0.21 / 1000.0);
  const double lo = 0.3 - half, hi = 0.3 + half;
  const double err = std::max({relative(ci.lo, lo), relative(ci.hi, hi),
                               relative(ci.hi - ci.lo, hi - lo)});
  return {std::abs(post.mode() - 0.3) <= 1e-3 + 1e-12 && err < 0.10,
          fmt("mode %.4f; interval [%.4f, %.4f] vs oracle [%.4f, ", post.mode(), ci.lo, ci.hi, lo) +
              fmt("%.4f], max relative error %.4f (limit 0.10)", hi, err)};
}

// 7. Betting scenario and mismatch report.
Outcome decision_link() {
  const decision::WeightAssignment w({{"A", 0.3}, {"B", 0.7}});
  const std::vector<decision::Bet> bets{
      {"A", decision::UtilityAssignment({{"A", 2.0}, {"B", 0.0}})},
      {"B", decision::UtilityAssignment({{"A", 0.0}, {"B", 1.5}})}};
  const double eu_a = decision::expected_utility(w, bets[0].payoff_per_outcome);
  const double eu_b = decision::expected_utility(w, bets[1].payoff_per_outcome);
  const std::string chosen = decision::choose(w, bets);
  const double ulp = std::numeric_limits<double>::epsilon();
  const bool eu_ok = eu_a == 0.6 && std::abs(eu_b - 1.05) <= 4 * ulp && chosen == "B";

  const auto report = decision::mismatch_report(0.3, 0.5, 1000);
  const auto exact = oracle::binomial_table(1000, 0.3, 0.7);
  double oracle_mass = 0.0;
  for (std::size_t m = 0; m <= 1000; ++m) {
    const double d = static_cast<double>(m);
    if (d >= report.weight_window.first && d <= report.weight_window.second) oracle_mass += exact[m];
  }
  const bool mass_ok = report.presence_in_weight_window < 1e-10 &&
                       relative(report.presence_in_weight_window, oracle_mass) < 1e-9;
  return {eu_ok && mass_ok,
          fmt("EU(A) %.17g, EU(B) %.17g, ", eu_a, eu_b) + "chosen " + chosen +
              fmt("; presence mass in weight window %.4g (oracle %.4g, limit 1e-10)",
                  report.presence_in_weight_window, oracle_mass)};
}

Eigen::MatrixXcd random_hermitian(std::mt19937_64& rng, Eigen::Index dim) {
  std::normal_distribution<double> normal;
  Eigen::MatrixXcd a(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) a(i, j) = Complex(normal(rng), normal(rng));
  }
  return 0.5 * (a + a.adjoint());
}

std::vector<Complex> random_amplitudes(std::mt19937_64& rng, std::size_t dim) {
  std::normal_distribution<double> normal;
  std::vector<Complex> amps(dim);
  double n2 = 0.0;
  for (auto& a : amps) {
    a = Complex(normal(rng), normal(rng));
    n2 += std::norm(a);
  }
  for (auto& a : amps) a /= std::sqrt(n2);
  return amps;
}

// 8. Unitarity, branch presences and the decoherence toy.
Outcome quantum_core() {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> log_t(-3.0, 3.0);
  double worst_norm = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t dim = 2 + trial % 7;
    const quantum::HermitianOperator h(random_hermitian(rng, static_cast<Eigen::Index>(dim)));
    const auto state = quantum::StateVector::normalized(random_amplitudes(rng, dim));
    const double t = std::pow(10.0, log_t(rng));
    worst_norm = std::max(worst_norm, std::abs(quantum::evolve(state, h, t).norm_squared() - 1.0));
  }

  std::size_t presence_mismatches = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t dim = 2 + trial % 5;
    const auto amps = random_amplitudes(rng, dim);
    const auto joint =
        quantum::observe_entangle(quantum::measure_entangle(quantum::StateVector::normalized(amps), dim + 1));
    for (const auto& branch : joint.branches()) {
      if (branch.presence != std::norm(amps[branch.labels[0]])) ++presence_mismatches;
    }
  }

  double worst_offdiag = 0.0;
  const double h = 1.0 / std::sqrt(2.0);
  const Complex g = std::polar(0.85, 0.3);
  for (std::size_t n = 0; n <= 10; ++n) {
    Eigen::VectorXcd e0(2), e1(2);
    e0 << 1.0, 0.0;
    e1 << g, std::sqrt(1.0 - std::norm(g));
    Eigen::VectorXcd b0 = Eigen::VectorXcd::Constant(1, 1.0), b1 = b0;
    for (std::size_t k = 0; k < n; ++k) {
      b0 = oracle::kron(b0, e0);
      b1 = oracle::kron(b1, e1);
    }
    Eigen::VectorXcd s0(2), s1(2);
    s0 << h, 0.0;
    s1 << 0.0, h;
    const Eigen::VectorXcd dense = oracle::kron(s0, b0) + oracle::kron(s1, b1);
    const Eigen::Index rest = dense.size() / 2;
    const Complex dense_offdiag = dense.segment(rest, rest).dot(dense.segment(0, rest));

    const auto joint = quantum::entangle_environment(
        quantum::JointState::from_system(quantum::StateVector::normalized({h, h})), 0, n, g);
    const auto rho = quantum::partial_trace(joint, 0);
    const double want = 0.5 * std::pow(std::abs(g), static_cast<double>(n));
    worst_offdiag = std::max({worst_offdiag, std::abs(std::abs(rho.entries()(0, 1)) - want),
                              std::abs(std::abs(dense_offdiag) - want),
                              std::abs(rho.entries()(0, 1) - dense_offdiag)});
  }
  return {worst_norm < 1e-9 && presence_mismatches == 0 && worst_offdiag < 1e-9,
          fmt("max norm deviation %.3g (limit 1e-9); branch presence mismatches %.0f; "
              "decoherence max deviation %.3g (limit 1e-9)",
              worst_norm, static_cast<double>(presence_mismatches), worst_offdiag)};
}

// 9. Weight distribution coincides with the count distribution.
Outcome weight_presence_identity() {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> x_dist(0.0, 1.0);
  std::uniform_int_distribution<std::size_t> n_dist(1, 5000);
  double worst = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const double x = x_dist(rng);
    const std::size_t n = n_dist(rng);
    const auto w = decision::repeated_weight_distribution(x, n);
    const auto rho = branching::count_distribution(RepeatedExperiment::binary(x, n));
    for (std::size_t m = 0; m <= n; ++m) worst = std::max(worst, std::abs(w[m] - rho[m]));
  }
  return {worst <= 1e-15, fmt("max pointwise deviation %.3g over 200 draws (limit 1e-15)", worst)};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    Outcome (*check)();
  };
  const Criterion criteria[] = {
      {"oracle equivalence", oracle_equivalence},
      {"frequency density reproduction", frequency_reproduction},
      {"gaussian approximation", gaussian_accuracy},
      {"chebyshev bound", chebyshev_bound},
      {"finkelstein limit", finkelstein_limit},
      {"inferential link", inferential_link},
      {"decision link", decision_link},
      {"quantum-core properties", quantum_core},
      {"weight/presence identity", weight_presence_identity},
  };
  int failures = 0;
  int index = 0;
  for (const auto& c : criteria) {
    ++index;
    Outcome outcome;
    try {
      outcome = c.check();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    if (!outcome.pass) ++failures;
    std::printf("%s %d %s: %s\n", outcome.pass ? "PASS" : "FAIL", index, c.name,
                outcome.detail.c_str());
  }
  std::printf("%d of %d criteria passed\n", index - failures, index);
  return failures == 0 ? 0 : 1;
}
