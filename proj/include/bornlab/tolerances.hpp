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

namespace bornlab::tol {

// Normalization of discrete states and presence distributions.
inline constexpr double kNorm = 1e-9;
// Looser check applied when an operation is handed an arbitrary vector.
inline constexpr double kNormInput = 1e-6;
// Grid quadrature objects.
inline constexpr double kGridNorm = 1e-6;
inline constexpr double kHermitian = 1e-12;
inline constexpr double kDiagonalFloor = -1e-12;
inline constexpr double kCountSum = 1e-12;
inline constexpr double kWeightSum = 1e-12;
inline constexpr double kPriorIntegral = 1e-9;
inline constexpr double kPosteriorIntegral = 1e-6;

}  // namespace bornlab::tol
