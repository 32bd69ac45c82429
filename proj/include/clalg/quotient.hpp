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

#ifndef CLALG_QUOTIENT_HPP_
#define CLALG_QUOTIENT_HPP_

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "clalg/ideals.hpp"
#include "clalg/validator.hpp"

namespace clalg {

/// The relation x ~ y iff x*~y and y*~x both lie in I, verified rather than
/// assumed to be a congruence.
///
/// `equivalence` fails with rho_reflexivity(x), rho_symmetry(x,y) or
/// rho_transitivity(x,y,z). `compatibility` fails with rule
/// compat_meet|compat_join|compat_mult|compat_imp(x,x',y,y') or
/// compat_neg(x,x'); operations are tried in that order.
struct Congruence {
  std::size_t universe_size = 0;
  Subset ideal;
  Verdict equivalence;
  Verdict compatibility;
  /// Classes ordered by least member; empty unless `equivalence` passed.
  std::vector<Subset> classes;
  std::vector<std::size_t> class_index;

  bool certified() const { return equivalence.pass && compatibility.pass; }
};

/// Both relation directions, straight from the definition.
bool related(const Structure& alg, Subset ideal, ElementId x, ElementId y);

Congruence congruence_from_ideal(const Structure& alg, const Ideal& ideal);

/// Members of x's class. Throws Error if the relation is not an equivalence.
Subset class_of(const Congruence& cong, ElementId x);

class NotACongruence : public Error {
 public:
  explicit NotACongruence(Witness w);
  const Witness& witness() const { return witness_; }

 private:
  Witness witness_;
};

/// The class tables failed CL validation, or the meet-derived class order
/// disagreed with the criterion ~(x->y) in I (rule order_criterion(x,y)).
class QuotientInvalid : public Error {
 public:
  QuotientInvalid(std::string what, ValidationReport report, std::optional<Witness> order_witness);
  const ValidationReport& report() const { return report_; }
  const std::optional<Witness>& order_witness() const { return order_witness_; }

 private:
  ValidationReport report_;
  std::optional<Witness> order_witness_;
};

struct QuotientAlgebra {
  FiniteCLAlgebra algebra;
  /// projection[x] is the quotient element holding x.
  std::vector<ElementId> projection;
  Congruence congruence;
  ValidationReport report;
};

/// Elements are the classes, named "[rep]" after their least member and
/// ordered by it. Throws NotACongruence or QuotientInvalid.
QuotientAlgebra build_quotient(const Structure& alg, const Ideal& ideal);

/// (class order [x] <= [y] in the quotient, ~(x->y) in I).
std::pair<bool, bool> check_order_criterion(const Structure& alg, const Ideal& ideal,
                                            const QuotientAlgebra& quotient, ElementId x, ElementId y);

enum class ClaimStatus { Holds, Violated, Vacuous };
std::string_view to_string(ClaimStatus s);

struct Claim {
  std::string name;
  ClaimStatus status = ClaimStatus::Vacuous;
  std::optional<Witness> witness;
};

/// Conditional quotient theorems evaluated on one ideal:
///   distributive_quotient  distributive ideal => distributive class lattice
///                          (witness quotient_not_distributive(x,y,z))
///   linear_quotient        prime ideal => classes form a chain
///                          (witness quotient_not_linear(x,y))
///   residuated_quotient    affine ideal => [top] = [1]
///                          (witness quotient_top_not_one(top,1))
///   singleton_classes      I = {x : x <= 0} => every class is a singleton
///                          (witness class_not_singleton(x,y))
/// Witness elements are base-algebra representatives.
struct TheoremReport {
  Subset ideal;
  std::array<Claim, 4> claims;
  bool any_violated() const;
};

/// Requires a certified congruence; propagates NotACongruence and
/// QuotientInvalid from build_quotient.
TheoremReport theorem_suite(const FiniteCLAlgebra& alg, const Ideal& ideal);

}  // namespace clalg

#endif  // CLALG_QUOTIENT_HPP_
