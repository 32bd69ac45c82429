// Copyright 2026 The clalg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CLALG_REPLAY_HPP_
#define CLALG_REPLAY_HPP_

#include <optional>

#include "clalg/algebra.hpp"
#include "clalg/witness.hpp"

namespace clalg {

/// Re-evaluates the condition a witness claims is violated, directly from
/// the candidate's tables. `subset` is the ideal (or subset) the witness
/// refers to, when it refers to one. Returns true iff the violation is
/// reproduced. Throws Error for unknown rules or missing context.
bool replay(const AlgebraCandidate& candidate, const Witness& witness, std::optional<Subset> subset = std::nullopt);

}  // namespace clalg

#endif  // CLALG_REPLAY_HPP_
