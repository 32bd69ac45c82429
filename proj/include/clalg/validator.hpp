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

#ifndef CLALG_VALIDATOR_HPP_
#define CLALG_VALIDATOR_HPP_

#include <optional>

#include "clalg/algebra.hpp"
#include "clalg/witness.hpp"

namespace clalg {

/// Witness rule names used by the validator. Tuples are ordered
/// lexicographically by element index; the first failing tuple is reported.
///
///   reflexivity(x)  antisymmetry(x,y)  transitivity(x,y,z)
///   no_join(x,y)  no_meet(x,y)  bot_not_least(x)
///   commutativity(x,y)  associativity(x,y,z)  unit(x)
///   residuation(x,y,z)  no_residual(x,y)  involution(x)
///   implication_absent(x,y)
///
/// Within one axiom the groups are tried in the order listed.

struct StructuralFlags {
  bool linear = false;
  bool distributive_lattice = false;
  bool idempotent = false;
  bool residuated_lattice = false;

  friend bool operator==(const StructuralFlags&, const StructuralFlags&) = default;
};

struct ValidationReport {
  Verdict lattice;
  Verdict monoid;
  Verdict residuation;
  Verdict involution;
  bool implication_derived = false;
  std::optional<ElementId> top;
  std::optional<StructuralFlags> flags;

  bool all_pass() const { return lattice.pass && monoid.pass && residuation.pass && involution.pass; }
};

struct ValidationOutcome {
  ValidationReport report;
  std::optional<FiniteCLAlgebra> algebra;  // set iff every axiom passes
};

Verdict check_lattice(const AlgebraCandidate& candidate);
Verdict check_monoid(const AlgebraCandidate& candidate);
/// Uses the candidate's imp table, deriving one if absent.
Verdict check_residuation(const AlgebraCandidate& candidate);
Verdict check_residuation(const AlgebraCandidate& candidate, const OperationTable& imp);
Verdict check_involution(const AlgebraCandidate& candidate, const OperationTable& imp);

/// Runs all four checks to completion. Never mutates the candidate; a
/// derived implication is attached to the sealed algebra only.
ValidationOutcome validate(const AlgebraCandidate& candidate);

/// Raised when x*y <= x for all x,y disagrees with top == one.
class EquivalenceBroken : public Error {
 public:
  EquivalenceBroken(ElementId x, ElementId y);
  ElementId x, y;
};

/// top == one, cross-checked against "x*y <= x for all x, y".
bool is_residuated_lattice(const FiniteCLAlgebra& alg);
bool is_idempotent(const Structure& alg);
bool is_linear(const Structure& alg);
bool is_distributive_lattice(const Structure& alg);

}  // namespace clalg

#endif  // CLALG_VALIDATOR_HPP_
