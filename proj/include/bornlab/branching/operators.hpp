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

#include <Eigen/Dense>

#include "bornlab/branching/experiment.hpp"

namespace bornlab::branching {

// Largest N for which the frequency operator is applied on the full tensor
// space.
inline constexpr std::size_t kMaxExplicitRepetitions = 12;

// (eigenvalue m/N, presence) for m = 0..N, from the count distribution.
std::vector<std::pair<double, double>> frequency_operator_density(const RepeatedExperiment& exp);

// Same spectrum obtained by acting with F_N = (1/N) sum_i f_i on the product
// state psi^(x)N. Each eigenvalue's presence is |P_z Psi|^2, with the spectral
// projector P_z built as a Lagrange polynomial in F_N. Throws
// std::length_error for N > kMaxExplicitRepetitions.
std::vector<std::pair<double, double>> frequency_operator_density_explicit(
    const RepeatedExperiment& exp);

// |(F_N - rho_u) Psi_N|^2 = rho_u rho_not_u / N.
double finkelstein_norm(const RepeatedExperiment& exp);

// The same norm by operator application on the tensor space.
double finkelstein_norm_explicit(const RepeatedExperiment& exp);

// psi^(x)N for psi_b = sqrt(presence_b); site 0 is the least significant digit.
Eigen::VectorXcd product_state(const RepeatedExperiment& exp);

// F_N applied to a vector on the d^N tensor space.
Eigen::VectorXcd apply_frequency_operator(const RepeatedExperiment& exp,
                                          const Eigen::VectorXcd& state);

}  // namespace bornlab::branching
