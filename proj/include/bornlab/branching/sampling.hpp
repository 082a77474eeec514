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

#include <cstdint>

#include "bornlab/branching/experiment.hpp"

namespace bornlab::branching {

// Draws one branch i.i.d. from the outcome presences. The generator is a
// private std::mt19937_64 seeded with `seed`, and uniforms are formed from its
// top 53 bits, so the sequence depends only on the seed.
BranchRecord sample_branch(const RepeatedExperiment& exp, std::uint64_t seed);

}  // namespace bornlab::branching
