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
#include <numeric>
#include <random>

#include <Eigen/Eigenvalues>
#include <gtest/gtest.h>

#include "bornlab/branching/counts.hpp"
#include "bornlab/branching/experiment.hpp"
#include "bornlab/branching/frequency.hpp"
#include "bornlab/branching/operators.hpp"
#include "bornlab/branching/sampling.hpp"
#include "oracles.hpp"

namespace bornlab::branching {
namespace {

double relative(double got, double want) {
  if (want == 0.0) return std::abs(got);
  return std::abs(got - want) / std::abs(want);
}

TEST(EnumerateBranches, SingleMeasurement) {
  const auto records = enumerate_branches(RepeatedExperiment::binary(0.3, 1));
  ASSERT_EQ(records.size(), 2u);
  EXPECT_EQ(records[0].sequence, std::vector<std::size_t>{0});
  EXPECT_DOUBLE_EQ(records[0].presence, 0.3);
  EXPECT_EQ(records[1].sequence, std::vector<std::size_t>{1});
  EXPECT_DOUBLE_EQ(records[1].presence, 0.7);
}

TEST(EnumerateBranches, CertainOutcome) {
  const auto records = enumerate_branches(RepeatedExperiment::binary(1.0, 6));
  std::size_t nonzero = 0;
  for (const auto& r : records) {
    if (r.presence == 0.0) continue;
    ++nonzero;
    EXPECT_EQ(r.count_of(0), 6u);
    EXPECT_EQ(r.presence, 1.0);
  }
  EXPECT_EQ(nonzero, 1u);
}

TEST(EnumerateBranches, SizeGuard) {
  try {
    enumerate_branches(RepeatedExperiment::binary(0.3, 25));
    FAIL() << "expected length_error";
  } catch (const std::length_error& e) {
    EXPECT_NE(std::string(e.what()).find(std::to_string(kMaxEnumeratedBranches)),
              std::string::npos);
  }
}

TEST(EnumerateBranches, PresencesSumToOne) {
  const RepeatedExperiment exp(quantum::PresenceDistribution({0.2, 0.5, 0.3}), 7, 1);
  double total = 0.0;
  std::size_t seen = 0;
  for_each_branch(exp, [&](const BranchRecord& r) {
    total += r.presence;
    ++seen;
  });
  EXPECT_EQ(seen, 2187u);
  EXPECT_NEAR(total, 1.0, 1e-13);
}

TEST(CountDistribution, FairBinary) {
  const auto d = count_distribution(RepeatedExperiment::binary(0.5, 2));
  EXPECT_DOUBLE_EQ(d[0], 0.25);
  EXPECT_DOUBLE_EQ(d[1], 0.5);
  EXPECT_DOUBLE_EQ(d[2], 0.25);
}

TEST(CountDistribution, MatchesLogSumOracleAtLargeN) {
  const auto d = count_distribution(RepeatedExperiment::binary(0.3, 1000));
  const auto want = oracle::binomial_table(1000, 0.3, 0.7);
  for (std::size_t m = 0; m <= 1000; ++m) {
    if (want[m] < 1e-300) continue;
    EXPECT_LT(relative(d[m], want[m]), 1e-12) << "m " << m;
  }
  EXPECT_NEAR(d.mean(), 300.0, 1e-9);
  EXPECT_NEAR(d.variance(), 210.0, 1e-8);
}

TEST(CountDistribution, EnumerationEquivalence) {
  for (double rho : {0.1, 0.3, 0.5, 0.9}) {
    for (std::size_t n = 1; n <= 16; ++n) {
      const auto exp = RepeatedExperiment::binary(rho, n);
      const auto records = enumerate_branches(exp);
      const auto aggregated = aggregate_by_count(exp, records);
      const auto closed = count_distribution(exp);
      for (std::size_t m = 0; m <= n; ++m) {
        EXPECT_LT(relative(closed[m], aggregated[m]), 1e-12) << rho << " " << n << " " << m;
      }
    }
  }
}

TEST(CountDistribution, ThreeOutcomeAlphabetFoldsIntoNotU) {
  const RepeatedExperiment exp(quantum::PresenceDistribution({0.2, 0.5, 0.3}), 9, 2);
  const auto records = enumerate_branches(exp);
  const auto aggregated = aggregate_by_count(exp, records);
  const auto closed = count_distribution(exp);
  for (std::size_t m = 0; m <= 9; ++m) EXPECT_LT(relative(closed[m], aggregated[m]), 1e-12);
}

TEST(CountDistribution, ReorderingInvariance) {
  std::mt19937_64 rng(99);
  const auto exp = RepeatedExperiment::binary(0.3, 12);
  auto records = enumerate_branches(exp);
  std::vector<std::size_t> perm(12);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  for (auto& r : records) {
    std::vector<std::size_t> permuted(12);
    for (std::size_t i = 0; i < 12; ++i) permuted[i] = r.sequence[perm[i]];
    r.sequence = permuted;
    r.presence = 1.0;
    for (std::size_t pos : r.sequence) r.presence *= exp.outcome_presences()[pos];
  }
  const auto permuted = aggregate_by_count(exp, records);
  const auto closed = count_distribution(exp);
  for (std::size_t m = 0; m <= 12; ++m) EXPECT_LT(relative(permuted[m], closed[m]), 1e-12);
}

TEST(CountDistribution, NormalizedAcrossSizes) {
  for (std::size_t n : {1u, 5u, 30u, 31u, 100u, 1000u, 100000u}) {
    const auto d = count_distribution(RepeatedExperiment::binary(0.37, n));
    double total = 0.0;
    for (double v : d.values()) total += v;
    EXPECT_NEAR(total, 1.0, 1e-12) << n;
  }
  EXPECT_THROW(CountDistribution({0.5, 0.4}), std::invalid_argument);
}

TEST(GaussianApprox, PeakSymmetryAndAccuracy) {
  const auto exp = RepeatedExperiment::binary(0.3, 1000);
  const double peak = 1.0 / std::sqrt(2.0 * std::numbers::pi * 210.0);
  EXPECT_NEAR(gaussian_approx(exp, 300.0), peak, 1e-15);
  // The closed form is 0.0275296..., quoted to four figures as 0.02754.
  EXPECT_NEAR(peak, 0.02753, 5e-6);
  for (double d : {1.0, 7.5, 20.0}) {
    EXPECT_DOUBLE_EQ(gaussian_approx(exp, 300.0 + d), gaussian_approx(exp, 300.0 - d));
  }
  EXPECT_LT(relative(gaussian_approx(exp, 300.0), count_distribution(exp)[300]), 0.01);
}

TEST(GaussianApprox, DegenerateRefused) {
  try {
    gaussian_approx(RepeatedExperiment::binary(1.0, 10), 10.0);
    FAIL() << "expected domain_error";
  } catch (const std::domain_error& e) {
    EXPECT_NE(std::string(e.what()).find("count_distribution"), std::string::npos);
  }
  EXPECT_THROW(gaussian_approx(RepeatedExperiment::binary(0.0, 10), 0.0), std::domain_error);
}

TEST(FrequencyDensity, PeakAndWidth) {
  const auto rho = frequency_density(RepeatedExperiment::binary(0.3, 1000));
  const double peak = std::sqrt(1000.0 / (2.0 * std::numbers::pi * 0.21));
  EXPECT_NEAR(rho(0.3), peak, 1e-12);
  EXPECT_NEAR(rho.peak_height(), 27.5296, 5e-4);
  EXPECT_LT(rho(0.2995), rho(0.3));
  EXPECT_LT(rho(0.3005), rho(0.3));
  EXPECT_NEAR(rho.standard_deviation(), std::sqrt(0.21 / 1000.0), 1e-15);
  EXPECT_NEAR(rho.standard_deviation(), 0.01449, 5e-6);
  const auto wider = frequency_density(RepeatedExperiment::binary(0.3, 4000));
  EXPECT_NEAR(wider.standard_deviation() / rho.standard_deviation(), 0.5, 1e-15);
}

TEST(FrequencyDensity, IntegratesToOneAwayFromBoundaries) {
  for (double r : {0.1, 0.3, 0.5, 0.9}) {
    for (std::size_t n : {100u, 1000u, 100000u}) {
      const double sigma = std::sqrt(r * (1.0 - r) / static_cast<double>(n));
      if (std::min(r, 1.0 - r) < 5.0 * sigma) continue;
      EXPECT_NEAR(frequency_density(RepeatedExperiment::binary(r, n)).integral(), 1.0, 1e-6)
          << r << " " << n;
    }
  }
}

TEST(FrequencyDensity, DeficitIsGaussianMassOutsideUnitInterval) {
  for (double r : {0.1, 0.3, 0.5, 0.9}) {
    for (std::size_t n : {100u, 1000u, 100000u}) {
      const double sigma = std::sqrt(r * (1.0 - r) / static_cast<double>(n));
      const double outside = 0.5 * std::erfc(r / (sigma * std::sqrt(2.0))) +
                             0.5 * std::erfc((1.0 - r) / (sigma * std::sqrt(2.0)));
      EXPECT_NEAR(frequency_density(RepeatedExperiment::binary(r, n)).integral(), 1.0 - outside,
                  1e-7)
          << r << " " << n;
    }
  }
}

TEST(IntervalPartition, CoversUnitInterval) {
  const IntervalPartition part(0.3, 0.1);
  EXPECT_EQ(part.bin_of(0.3), 0);
  EXPECT_EQ(part.bin_of(0.25), 0);
  EXPECT_EQ(part.bin_of(0.35), 1);
  EXPECT_EQ(part.bin_of(0.0), part.k_min());
  EXPECT_EQ(part.bin_of(1.0), part.k_max());
  const auto bins = part.intervals();
  EXPECT_EQ(bins.front().lo, 0.0);
  EXPECT_EQ(bins.back().hi, 1.0);
  for (std::size_t i = 1; i < bins.size(); ++i) EXPECT_NEAR(bins[i].lo, bins[i - 1].hi, 1e-15);
  EXPECT_THROW(IntervalPartition(0.3, 0.0), std::invalid_argument);
  EXPECT_THROW(IntervalPartition(0.3, 1.5), std::invalid_argument);
}

TEST(HistogramDensity, FullWidthBinIsSingleBar) {
  const auto h = histogram_density(RepeatedExperiment::binary(0.5, 50), 1.0);
  ASSERT_EQ(h.masses().size(), 1u);
  EXPECT_NEAR(h.masses()[0], 1.0, 1e-12);
  EXPECT_NEAR(h(0.5), 1.0, 1e-12);
}

TEST(HistogramDensity, MatchesDirectBinning) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> rho_dist(0.05, 0.95), dz_dist(0.01, 0.5);
  for (int trial = 0; trial < 40; ++trial) {
    const double rho = rho_dist(rng), dz = dz_dist(rng);
    const std::size_t n = 20 + 37 * static_cast<std::size_t>(trial);
    const auto h = histogram_density(RepeatedExperiment::binary(rho, n), dz);
    const auto pmf = oracle::binomial_table(n, rho, 1.0 - rho);
    std::vector<double> want(h.masses().size(), 0.0);
    for (std::size_t m = 0; m <= n; ++m) {
      // Left-closed bins, with the last bin absorbing z = 1.
      const double t = (static_cast<double>(m) / static_cast<double>(n) - rho) / dz + 0.5;
      int k = static_cast<int>(std::floor(t + 1e-9));
      k = std::clamp(k, h.partition().k_min(), h.partition().k_max());
      want[static_cast<std::size_t>(k - h.partition().k_min())] += pmf[m];
    }
    double total = 0.0;
    for (std::size_t i = 0; i < want.size(); ++i) {
      EXPECT_NEAR(h.masses()[i], want[i], 1e-12) << rho << " " << dz << " " << n;
      total += h.masses()[i];
    }
    EXPECT_NEAR(total, 1.0, 1e-12);
  }
}

TEST(ChebyshevTail, ReferenceInstance) {
  const auto tail = chebyshev_tail(RepeatedExperiment::binary(0.3, 1000), 0.1);
  EXPECT_NEAR(tail.bound, 0.084, 1e-15);
  EXPECT_LE(tail.exact_tail, tail.bound);
  const auto doubled = chebyshev_tail(RepeatedExperiment::binary(0.3, 2000), 0.1);
  EXPECT_NEAR(doubled.bound, tail.bound / 2.0, 1e-15);
}

TEST(ChebyshevTail, ExactTailMatchesOracle) {
  const std::size_t n = 500;
  const double rho = 0.4, dz = 0.06;
  const auto pmf = oracle::binomial_table(n, rho, 1.0 - rho);
  double want = 0.0;
  for (std::size_t m = 0; m <= n; ++m) {
    // |m - N rho| > N dz / 2, with integer arithmetic: |5m - 2000| > 75 over 5.
    if (std::abs(static_cast<long>(5 * m) - 1000) > 75) want += pmf[m];
  }
  EXPECT_NEAR(chebyshev_tail(RepeatedExperiment::binary(rho, n), dz).exact_tail, want, 1e-13);
}

TEST(ChebyshevTail, ShrinksWithN) {
  double prev = 1.0;
  for (std::size_t n : {100u, 1000u, 10000u}) {
    const double t = chebyshev_tail(RepeatedExperiment::binary(0.3, n), 0.1).exact_tail;
    EXPECT_LT(t, prev);
    prev = t;
  }
}

TEST(ChebyshevTail, BoundHoldsOnRandomTriples) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> rho_dist(0.01, 0.99), dz_dist(0.005, 1.0);
  std::uniform_int_distribution<std::size_t> n_dist(1, 20000);
  for (int trial = 0; trial < 200; ++trial) {
    const double rho = rho_dist(rng), dz = dz_dist(rng);
    const std::size_t n = n_dist(rng);
    const auto tail = chebyshev_tail(RepeatedExperiment::binary(rho, n), dz);
    EXPECT_LE(tail.exact_tail, tail.bound) << rho << " " << n << " " << dz;
  }
}

TEST(CoarseFrequencyOperator, Bars) {
  const auto single = coarse_frequency_operator_density(RepeatedExperiment::binary(0.5, 40), 1.0);
  ASSERT_EQ(single.size(), 1u);
  EXPECT_EQ(single[0].first, 0.5);
  EXPECT_NEAR(single[0].second, 1.0, 1e-12);

  const auto bars = coarse_frequency_operator_density(RepeatedExperiment::binary(0.3, 1000), 0.05);
  double total = 0.0, central = 0.0;
  for (const auto& [z, mass] : bars) {
    total += mass;
    if (std::abs(z - 0.3) < 1e-12) central = mass;
  }
  EXPECT_NEAR(total, 1.0, 1e-12);
  EXPECT_GT(central, 0.9);
}

TEST(CoarseFrequencyOperator, CentralMassApproachesOne) {
  for (double rho : {0.2, 0.5}) {
    const double dz = 0.05;
    double prev = 0.0;
    for (std::size_t n : {100u, 1000u, 10000u}) {
      const auto h = histogram_density(RepeatedExperiment::binary(rho, n), dz);
      const double central = h.mass(0);
      EXPECT_GE(central, prev);
      EXPECT_GT(central, 1.0 - 4.0 * rho * (1.0 - rho) / (dz * dz * static_cast<double>(n)));
      prev = central;
    }
  }
}

TEST(FrequencyOperator, SingleMeasurementSpectrum) {
  const auto spectrum = frequency_operator_density(RepeatedExperiment::binary(0.3, 1));
  ASSERT_EQ(spectrum.size(), 2u);
  EXPECT_EQ(spectrum[0].first, 0.0);
  EXPECT_DOUBLE_EQ(spectrum[0].second, 0.7);
  EXPECT_EQ(spectrum[1].first, 1.0);
  EXPECT_DOUBLE_EQ(spectrum[1].second, 0.3);
}

TEST(FrequencyOperator, EigenstateProduct) {
  for (const auto& spectrum : {frequency_operator_density(RepeatedExperiment::binary(1.0, 6)),
                           frequency_operator_density_explicit(RepeatedExperiment::binary(1.0, 6))}) {
    for (const auto& [z, p] : spectrum) EXPECT_NEAR(p, z == 1.0 ? 1.0 : 0.0, 1e-12);
  }
}

TEST(FrequencyOperator, ExplicitMatchesClosedForm) {
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto exp = RepeatedExperiment::binary(0.3, n);
    const auto closed = frequency_operator_density(exp);
    const auto explicit_spectrum = frequency_operator_density_explicit(exp);
    ASSERT_EQ(closed.size(), explicit_spectrum.size());
    for (std::size_t m = 0; m <= n; ++m) {
      EXPECT_NEAR(explicit_spectrum[m].first, closed[m].first, 1e-15);
      EXPECT_NEAR(explicit_spectrum[m].second, closed[m].second, 1e-12) << n << " " << m;
    }
  }
  EXPECT_THROW(frequency_operator_density_explicit(RepeatedExperiment::binary(0.3, 13)),
               std::length_error);
}

TEST(FrequencyOperator, DenseOracleAtEightRepetitions) {
  const auto exp = RepeatedExperiment::binary(0.3, 8);
  const Eigen::MatrixXcd f = oracle::dense_frequency_operator(8);
  const Eigen::VectorXcd psi = product_state(exp);
  EXPECT_LT((f * psi - apply_frequency_operator(exp, psi)).norm(), 1e-13);

  // Spectral decomposition of the dense operator, grouped by eigenvalue m/8.
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(f);
  std::vector<double> mass(9, 0.0);
  const Eigen::VectorXcd coeff = solver.eigenvectors().adjoint() * psi;
  for (Eigen::Index i = 0; i < coeff.size(); ++i) {
    const auto m = static_cast<std::size_t>(std::lround(solver.eigenvalues()(i) * 8.0));
    mass[m] += std::norm(coeff(i));
  }
  const auto pmf = oracle::binomial_table(8, 0.3, 0.7);
  const auto spectrum = frequency_operator_density_explicit(exp);
  for (std::size_t m = 0; m <= 8; ++m) {
    EXPECT_NEAR(mass[m], pmf[m], 1e-12);
    EXPECT_NEAR(spectrum[m].second, pmf[m], 1e-12);
  }
}

TEST(FinkelsteinNorm, Values) {
  EXPECT_NEAR(finkelstein_norm(RepeatedExperiment::binary(0.3, 1)), 0.21, 1e-15);
  for (double r : {0.0, 1.0}) {
    for (std::size_t n : {1u, 5u, 1000u}) {
      EXPECT_EQ(finkelstein_norm(RepeatedExperiment::binary(r, n)), 0.0);
    }
    EXPECT_NEAR(finkelstein_norm_explicit(RepeatedExperiment::binary(r, 6)), 0.0, 1e-15);
  }
  double prev = INFINITY;
  for (std::size_t n = 10; n <= 1000000; n *= 10) {
    const double v = finkelstein_norm(RepeatedExperiment::binary(0.3, n));
    EXPECT_NEAR(v * static_cast<double>(n), 0.21, 1e-12);
    EXPECT_LT(v, prev);
    prev = v;
  }
  EXPECT_LT(prev, 1e-6);
}

TEST(FinkelsteinNorm, ExplicitAgreesWithClosedForm) {
  for (double r : {0.1, 0.3, 0.5, 0.9}) {
    for (std::size_t n = 1; n <= 10; ++n) {
      const auto exp = RepeatedExperiment::binary(r, n);
      EXPECT_NEAR(finkelstein_norm_explicit(exp), finkelstein_norm(exp), 1e-12);
    }
  }
  // Direct dense check at N = 1.
  const auto exp = RepeatedExperiment::binary(0.3, 1);
  const Eigen::VectorXcd psi = product_state(exp);
  const Eigen::VectorXcd resid = oracle::dense_frequency_operator(1) * psi - 0.3 * psi;
  EXPECT_NEAR(resid.squaredNorm(), 0.21, 1e-15);
}

TEST(SampleBranch, CertainOutcome) {
  for (std::uint64_t seed : {0ull, 1ull, 12345ull}) {
    const auto r = sample_branch(RepeatedExperiment::binary(1.0, 50), seed);
    EXPECT_EQ(r.count_of(0), 50u);
  }
}

TEST(SampleBranch, Deterministic) {
  const auto exp = RepeatedExperiment::binary(0.3, 500);
  const auto a = sample_branch(exp, 77);
  const auto b = sample_branch(exp, 77);
  EXPECT_EQ(a.sequence, b.sequence);
  EXPECT_EQ(a.presence, b.presence);
  EXPECT_NE(a.sequence, sample_branch(exp, 78).sequence);
}

TEST(SampleBranch, EmpiricalFrequencyConcentrates) {
  const auto exp = RepeatedExperiment::binary(0.3, 1000);
  std::size_t hits = 0;
  for (std::uint64_t seed = 0; seed < 10000; ++seed) hits += sample_branch(exp, seed).count_of(0);
  const double freq = static_cast<double>(hits) / 1e7;
  EXPECT_LT(std::abs(freq - 0.3), 3.0 * std::sqrt(0.21 / 1e7));
}

}  // namespace
}  // namespace bornlab::branching
