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

#include "bornlab/branching/operators.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "bornlab/branching/counts.hpp"

namespace bornlab::branching {
namespace {

std::size_t tensor_dimension(const RepeatedExperiment& exp) {
  if (exp.repetitions() > kMaxExplicitRepetitions) {
    throw std::length_error("explicit frequency operator limited to N <= " +
                            std::to_string(kMaxExplicitRepetitions) + ", got N = " +
                            std::to_string(exp.repetitions()));
  }
  std::size_t dim = 1;
  for (std::size_t i = 0; i < exp.repetitions(); ++i) {
    dim *= exp.alphabet_size();
    if (dim > kMaxEnumeratedBranches) {
      throw std::length_error("explicit frequency operator: tensor space exceeds 2^24");
    }
  }
  return dim;
}

}  // namespace

std::vector<std::pair<double, double>> frequency_operator_density(const RepeatedExperiment& exp) {
  const auto counts = count_distribution(exp);
  const double n = static_cast<double>(exp.repetitions());
  std::vector<std::pair<double, double>> out;
  out.reserve(counts.size());
  for (std::size_t m = 0; m < counts.size(); ++m) {
    out.emplace_back(static_cast<double>(m) / n, counts[m]);
  }
  return out;
}

Eigen::VectorXcd product_state(const RepeatedExperiment& exp) {
  const std::size_t dim = tensor_dimension(exp);
  const std::size_t d = exp.alphabet_size();
  std::vector<double> single(d);
  for (std::size_t b = 0; b < d; ++b) single[b] = std::sqrt(exp.outcome_presences()[b]);

  Eigen::VectorXcd psi(static_cast<Eigen::Index>(dim));
  for (std::size_t flat = 0; flat < dim; ++flat) {
    double amp = 1.0;
    std::size_t rest = flat;
    for (std::size_t site = 0; site < exp.repetitions(); ++site) {
      amp *= single[rest % d];
      rest /= d;
    }
    psi(static_cast<Eigen::Index>(flat)) = amp;
  }
  return psi;
}

Eigen::VectorXcd apply_frequency_operator(const RepeatedExperiment& exp,
                                          const Eigen::VectorXcd& state) {
  const std::size_t dim = tensor_dimension(exp);
  if (static_cast<std::size_t>(state.size()) != dim) {
    throw std::invalid_argument("apply_frequency_operator: state has wrong dimension");
  }
  const std::size_t d = exp.alphabet_size();
  const std::size_t u = exp.focus_position();
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(state.size());

  // f_i projects site i onto the focus outcome and leaves other sites alone.
  std::size_t stride = 1;
  for (std::size_t site = 0; site < exp.repetitions(); ++site, stride *= d) {
    for (std::size_t flat = 0; flat < dim; ++flat) {
      if ((flat / stride) % d == u) out(static_cast<Eigen::Index>(flat)) += state(static_cast<Eigen::Index>(flat));
    }
  }
  return out / static_cast<double>(exp.repetitions());
}

std::vector<std::pair<double, double>> frequency_operator_density_explicit(
    const RepeatedExperiment& exp) {
  const Eigen::VectorXcd psi = product_state(exp);
  const std::size_t n = exp.repetitions();
  const double nd = static_cast<double>(n);

  std::vector<std::pair<double, double>> out;
  for (std::size_t m = 0; m <= n; ++m) {
    const double z = static_cast<double>(m) / nd;
    // P_z = prod_{z' != z} (F_N - z') / (z - z') over the candidate spectrum m'/N.
    Eigen::VectorXcd projected = psi;
    for (std::size_t other = 0; other <= n; ++other) {
      if (other == m) continue;
      const double z_other = static_cast<double>(other) / nd;
      projected = (apply_frequency_operator(exp, projected) - z_other * projected) / (z - z_other);
    }
    out.emplace_back(z, projected.squaredNorm());
  }
  return out;
}

double finkelstein_norm(const RepeatedExperiment& exp) {
  return exp.rho_u() * exp.rho_not_u() / static_cast<double>(exp.repetitions());
}

double finkelstein_norm_explicit(const RepeatedExperiment& exp) {
  const Eigen::VectorXcd psi = product_state(exp);
  return (apply_frequency_operator(exp, psi) - exp.rho_u() * psi).squaredNorm();
}

}  // namespace bornlab::branching
