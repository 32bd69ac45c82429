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

#ifndef CLALG_WITNESS_HPP_
#define CLALG_WITNESS_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "clalg/element.hpp"

namespace clalg {

/// A concrete counterexample. `args` is the quantified tuple (compared
/// lexicographically to pick the first failure); `values` are evaluated
/// terms shown in reports, e.g. {"x+y", 1}.
struct Witness {
  std::string rule;
  std::vector<ElementId> args;
  std::vector<std::pair<std::string, ElementId>> values;

  friend bool operator==(const Witness&, const Witness&) = default;
};

/// Pass, or fail with the first witness.
struct Verdict {
  bool pass = true;
  std::optional<Witness> witness;

  static Verdict ok() { return {}; }
  static Verdict fail(Witness w) { return {false, std::move(w)}; }
  explicit operator bool() const { return pass; }

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

}  // namespace clalg

#endif  // CLALG_WITNESS_HPP_
