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

#include "bornlab/branching/counts.hpp"

#include <cmath>
#include <cstdio>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "bornlab/tolerances.hpp"

namespace bornlab::branching {

CountDistribution::CountDistribution(std::vector<double> values) : values_(std::move(values)) {
  if (values_.size() < 2) throw std::invalid_argument("count distribution needs N >= 1");
  double total = 0.0;
  for (double v : values_) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
      throw std::invalid_argument("count distribution values must be finite and non-negative");
    }
    total += v;
  }
  if (std::abs(total - 1.0) > tol::kCountSum) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "count distribution sums to %.17g", total);
    throw std::invalid_argument(buf);
  }
}

double CountDistribution::mean() const {
  double mean = 0.0;
  for (std::size_t m = 0; m < values_.size(); ++m) mean += static_cast<double>(m) * values_[m];
  return mean;
}

double CountDistribution::variance() const {
  const double mu = mean();
  double var = 0.0;
  for (std::size_t m = 0; m < values_.size(); ++m) {
    const double d = static_cast<double>(m) - mu;
    var += d * d * values_[m];
  }
  return var;
}

CountDistribution binomial_distribution(double p, double q, std::size_t repetitions) {
  if (repetitions == 0) throw std::invalid_argument("binomial distribution needs N >= 1");
  if (!(p >= 0.0) || !(q >= 0.0) || std::abs(p + q - 1.0) > tol::kNorm) {
    throw std::invalid_argument("binomial distribution needs p, q >= 0 with p + q = 1");
  }
  const std::size_t n = repetitions;
  std::vector<double> values(n + 1, 0.0);

  if (p == 0.0 || q == 0.0) {
    values[p == 0.0 ? 0 : n] = 1.0;
    return CountDistribution(std::move(values));
  }

  if (n <= kDirectBinomialLimit) {
    const double total = p + q;
    p /= total;
    q /= total;
    std::uint64_t c = 1;  // C(n, m), exact for n <= 30
    for (std::size_t m = 0; m <= n; ++m) {
      values[m] = static_cast<double>(c) * std::pow(p, static_cast<double>(m)) *
                  std::pow(q, static_cast<double>(n - m));
      c = c * (n - m) / (m + 1);
    }
    return CountDistribution(std::move(values));
  }

  // C(1000, 300) alone overflows a double; work with logs in extended precision.
  // p + q may miss 1 by an ulp, which (p + q)^N would amplify.
  const long double total = static_cast<long double>(p) + static_cast<long double>(q);
  const long double log_p = std::log(static_cast<long double>(p) / total);
  const long double log_q = std::log(static_cast<long double>(q) / total);
  const long double log_n_fact = std::lgamma(static_cast<long double>(n) + 1.0L);
  for (std::size_t m = 0; m <= n; ++m) {
    const long double mm = static_cast<long double>(m);
    const long double rest = static_cast<long double>(n - m);
    const long double log_term = log_n_fact - std::lgamma(mm + 1.0L) - std::lgamma(rest + 1.0L) +
                                 mm * log_p + rest * log_q;
    values[m] = static_cast<double>(std::exp(log_term));
  }
  return CountDistribution(std::move(values));
}

CountDistribution count_distribution(const RepeatedExperiment& exp) {
  return binomial_distribution(exp.rho_u(), exp.rho_not_u(), exp.repetitions());
}

}  // namespace bornlab::branching
