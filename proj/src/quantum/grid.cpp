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

#include "bornlab/quantum/grid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "bornlab/tolerances.hpp"

namespace bornlab::quantum {

GridWavefunction::GridWavefunction(std::vector<Complex> values, std::size_t points,
                                   std::size_t particles, double spacing, ParticleKind kind)
    : values_(std::move(values)),
      points_(points),
      particles_(particles),
      spacing_(spacing),
      kind_(kind) {
  if (particles_ != 1 && particles_ != 2) {
    throw std::invalid_argument("grid wavefunction supports one or two particles");
  }
  if (points_ == 0) throw std::invalid_argument("grid wavefunction needs at least one point");
  if (!(spacing_ > 0.0) || !std::isfinite(spacing_)) {
    throw std::invalid_argument("grid spacing must be positive and finite");
  }
  const std::size_t expected = particles_ == 1 ? points_ : points_ * points_;
  if (values_.size() != expected) {
    throw std::invalid_argument("grid wavefunction: expected " + std::to_string(expected) +
                                " values, got " + std::to_string(values_.size()));
  }
  double sum = 0.0;
  for (const auto& v : values_) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw std::invalid_argument("grid wavefunction: non-finite value");
    }
    sum += std::norm(v);
  }
  const double integral = sum * std::pow(spacing_, static_cast<double>(particles_));
  if (std::abs(integral - 1.0) > tol::kGridNorm) {
    throw NormalizationError("grid wavefunction is not normalized", integral);
  }
}

double GridWavefunction::particle_count() const {
  return particles_ == 2 && kind_ == ParticleKind::kIdentical ? 2.0 : 1.0;
}

std::vector<double> marginal_density(const GridWavefunction& psi) {
  const std::size_t n = psi.points();
  std::vector<double> rho(n, 0.0);
  if (psi.particles() == 1) {
    for (std::size_t i = 0; i < n; ++i) rho[i] = std::norm(psi(i));
    return rho;
  }
  const double factor = psi.particle_count() * psi.spacing();
  for (std::size_t i = 0; i < n; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < n; ++j) row += std::norm(psi(i, j));
    rho[i] = factor * row;
  }
  return rho;
}

std::vector<double> pair_density(const GridWavefunction& psi) {
  if (psi.particles() != 2) {
    throw std::invalid_argument("pair_density requires a two-particle wavefunction");
  }
  const double na = psi.kind() == ParticleKind::kIdentical ? 2.0 : 1.0;
  const double nb = psi.kind() == ParticleKind::kIdentical ? na - 1.0 : 1.0;
  std::vector<double> out(psi.values().size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = na * nb * std::norm(psi.values()[k]);
  return out;
}

double energy_shift(const GridWavefunction& psi, std::span<const double> potential) {
  if (potential.size() != psi.points()) {
    throw std::invalid_argument("energy_shift: potential has " + std::to_string(potential.size()) +
                                " points, grid has " + std::to_string(psi.points()));
  }
  const auto rho = marginal_density(psi);
  double shift = 0.0;
  for (std::size_t i = 0; i < rho.size(); ++i) shift += potential[i] * rho[i];
  return shift * psi.spacing();
}

}  // namespace bornlab::quantum
