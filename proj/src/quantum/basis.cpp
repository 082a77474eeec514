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

#include "bornlab/quantum/basis.hpp"

#include <stdexcept>
#include <unordered_set>

namespace bornlab::quantum {

std::vector<BasisLabel> canonical_basis(std::size_t dim) {
  std::vector<BasisLabel> labels(dim);
  for (std::size_t i = 0; i < dim; ++i) labels[i].index = i;
  return labels;
}

void require_unique_indices(std::span<const BasisLabel> labels) {
  std::unordered_set<std::size_t> seen;
  for (const auto& label : labels) {
    if (!seen.insert(label.index).second) {
      throw std::invalid_argument("duplicate basis label index " +
                                  std::to_string(label.index));
    }
  }
}

}  // namespace bornlab::quantum
