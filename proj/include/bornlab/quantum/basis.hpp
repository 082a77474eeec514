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
#include <string>
#include <vector>

namespace bornlab::quantum {

// One element of a finite labelled basis. Spin components and other discrete
// quantum numbers are folded into the same index space.
struct BasisLabel {
  std::size_t index = 0;
  std::string tag;

  friend bool operator==(const BasisLabel&, const BasisLabel&) = default;
};

// Labels 0..dim-1 with empty tags.
std::vector<BasisLabel> canonical_basis(std::size_t dim);

// Throws std::invalid_argument if two labels share an index.
void require_unique_indices(std::span<const BasisLabel> labels);

}  // namespace bornlab::quantum
