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

#ifndef CLALG_IDEALS_HPP_
#define CLALG_IDEALS_HPP_

#include <vector>

#include "clalg/algebra.hpp"
#include "clalg/witness.hpp"

namespace clalg {

class EmptySubset : public Error {
 public:
  EmptySubset() : Error("subset is empty") {}
};

class ZeroMissing : public Error {
 public:
  ZeroMissing() : Error("subset does not contain 0") {}
};

class NotAnIdeal : public Error {
 public:
  explicit NotAnIdeal(Witness w);
  const Witness& witness() const { return witness_; }

 private:
  Witness witness_;
};

/// A subset certified to contain 0 and to be closed under +, binary join
/// and downward. Obtain one through certify_ideal, generated_ideal,
/// all_ideals or zero_downset.
class Ideal {
 public:
  const Subset& members() const { return members_; }
  bool contains(ElementId x) const { return members_.contains(x); }

  friend bool operator==(const Ideal&, const Ideal&) = default;
  friend auto operator<=>(const Ideal& a, const Ideal& b) { return a.members_ <=> b.members_; }

 private:
  explicit Ideal(Subset s) : members_(s) {}
  friend Ideal certify_ideal(const Structure&, Subset);

  Subset members_;
};

/// Witness rules, tried in this order:
///   contains_zero(0)  plus_closed(x,y)  join_closed(x,y)  down_closed(x,y)
/// For down_closed, y is in S, x <= y and x is not.
/// Throws EmptySubset.
Verdict is_ideal(const Structure& alg, Subset s);

/// Throws NotAnIdeal with the is_ideal witness.
Ideal certify_ideal(const Structure& alg, Subset s);

/// Least ideal containing `seed` (from {0} when the seed is empty).
Ideal generated_ideal(const Structure& alg, Subset seed);

/// Every ideal, ascending by bit pattern. Enumerates down-sets of the order
/// and keeps those containing 0 and closed under + and join.
std::vector<Ideal> all_ideals(const Structure& alg);

/// Fails with prime(x,y) and values ~(x->y), ~(y->x) when neither lies in I.
Verdict is_prime(const Structure& alg, const Ideal& ideal);

/// Fails with distributive(x,y,z) when
/// ((x v y) ^ (x v z)) * ~(x v (y ^ z)) is outside I.
Verdict is_distributive_ideal(const Structure& alg, const Ideal& ideal);

/// Fails with implicative(x,y,z) when ~(x->(y->z)) and ~(x->y) lie in S but
/// ~(x->z) does not. Applies to any subset containing 0; throws ZeroMissing.
Verdict is_implicative(const Structure& alg, Subset s);

/// top*0 in I, with top = bot->bot.
bool is_affine(const Structure& alg, const Ideal& ideal);

/// { x : x <= 0 }. Throws NotAnIdeal, which is impossible on a validated
/// algebra.
Ideal zero_downset(const FiniteCLAlgebra& alg);

struct IdealClassification {
  bool is_prime = false;
  bool is_distributive = false;
  bool is_implicative = false;
  bool is_affine = false;
  bool is_zero_downset = false;

  friend bool operator==(const IdealClassification&, const IdealClassification&) = default;
};

IdealClassification classify(const Structure& alg, const Ideal& ideal);

/// Parses "a,b,c" against the element names. Throws Error on unknown names.
Subset parse_subset(const Structure& alg, std::string_view list);
std::string format_subset(const Structure& alg, Subset s);

}  // namespace clalg

#endif  // CLALG_IDEALS_HPP_
