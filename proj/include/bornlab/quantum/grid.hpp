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
#include <span>
#include <vector>

#include "bornlab/quantum/state.hpp"

namespace bornlab::quantum {

enum class ParticleKind { kDistinguishable, kIdentical };

// One- or two-particle wavefunction sampled on a regular 1-D grid. Two-particle
// values are stored row-major: values[i * points + j] = psi(x_i, x_j).
class GridWavefunction {
 public:
  GridWavefunction(std::vector<Complex> values, std::size_t points, std::size_t particles,
                   double spacing, ParticleKind kind = ParticleKind::kDistinguishable);

  std::size_t points() const { return points_; }
  std::size_t particles() const { return particles_; }
  double spacing() const { return spacing_; }
  ParticleKind kind() const { return kind_; }
  const std::vector<Complex>& values() const { return values_; }

  Complex operator()(std::size_t i) const { return values_[i]; }
  Complex operator()(std::size_t i, std::size_t j) const { return values_[i * points_ + j]; }

  // Number of particles the single-particle density integrates to.
  double particle_count() const;

 private:
  std::vector<Complex> values_;
  std::size_t points_;
  std::size_t particles_;
  double spacing_;
  ParticleKind kind_;
};

// Single-particle density rho(x). For two identical particles this is
// 2 * sum_{x2} |psi(x, x2)|^2 dx; for distinguishable ones it is the marginal of
// particle 1. A one-particle input returns |psi|^2.
std::vector<double> marginal_density(const GridWavefunction& psi);

// Two-particle density N_a N_b |psi(xa, xb)|^2 with N_b = N_a - 1 for identical
// particles. Row-major like the wavefunction.
std::vector<double> pair_density(const GridWavefunction& psi);

// Energy shift sum_x V(x) rho(x) dx of a weak external potential.
double energy_shift(const GridWavefunction& psi, std::span<const double> potential);

}  // namespace bornlab::quantum
