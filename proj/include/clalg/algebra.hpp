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

#ifndef CLALG_ALGEBRA_HPP_
#define CLALG_ALGEBRA_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "clalg/element.hpp"
#include "clalg/order.hpp"

namespace clalg {

/// n x n table of elements, row-major.
class OperationTable {
 public:
  OperationTable() = default;
  explicit OperationTable(std::size_t n, ElementId fill = ElementId(0)) : n_(n), cells_(n * n, fill) {}

  std::size_t size() const { return n_; }
  ElementId at(ElementId row, ElementId col) const { return cells_[row.index() * n_ + col.index()]; }
  void set(ElementId row, ElementId col, ElementId value) { cells_[row.index() * n_ + col.index()] = value; }
  const std::vector<ElementId>& cells() const { return cells_; }

  friend bool operator==(const OperationTable&, const OperationTable&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<ElementId> cells_;
};

/// Raised when an operation needs the implication table and none is available.
class ImplicationAbsent : public Error {
 public:
  ImplicationAbsent() : Error("implication table is neither supplied nor derivable") {}
};

/// An unvalidated algebra as read from a file: nothing beyond table shape is
/// assumed. `covers` keeps the declared Hasse edges for faithful
/// serialization; `order` is their reflexive-transitive closure.
struct AlgebraCandidate {
  std::string name;
  std::vector<std::string> elements;
  std::vector<Cover> covers;
  OrderRelation order;
  OperationTable mult;
  std::optional<OperationTable> imp;
  ElementId bot;
  ElementId zero;
  ElementId one;

  std::size_t size() const { return elements.size(); }
  /// Throws Error if unknown.
  ElementId id_of(std::string_view element_name) const;

  friend bool operator==(const AlgebraCandidate&, const AlgebraCandidate&) = default;
};

/// Residuation failed at (x, y): { z : x*z <= y } has no maximum.
struct NoResidual {
  ElementId x;
  ElementId y;
  std::vector<ElementId> maximal;  // maximal elements of the residual set
};

/// Builds the table imp(x, y) = max { z : mult(x, z) <= y }, or reports the
/// first (x, y) in index order where the maximum does not exist.
std::variant<OperationTable, NoResidual> derive_implication(const OrderRelation& order,
                                                            const OperationTable& mult);

/// A candidate whose order is a lattice and whose implication is known
/// (supplied or derived). All five operations are total here, but no CL
/// axiom beyond the lattice is guaranteed; see FiniteCLAlgebra.
class Structure {
 public:
  /// Throws NotALattice if some pair lacks a meet or join, and
  /// ImplicationAbsent if no imp table is given and derivation fails.
  explicit Structure(AlgebraCandidate candidate);
  /// Uses `imp` instead of the candidate's table.
  Structure(AlgebraCandidate candidate, OperationTable imp);

  const AlgebraCandidate& candidate() const { return candidate_; }
  const std::string& name() const { return candidate_.name; }
  std::size_t size() const { return candidate_.elements.size(); }
  const std::string& element_name(ElementId x) const { return candidate_.elements[x.index()]; }
  ElementId id_of(std::string_view element_name) const { return candidate_.id_of(element_name); }
  std::vector<ElementId> universe() const;

  const OrderRelation& order() const { return candidate_.order; }
  const OperationTable& mult_table() const { return candidate_.mult; }
  const OperationTable& imp_table() const { return imp_; }
  /// True when imp was computed by residuation rather than read from input.
  bool implication_derived() const { return implication_derived_; }

  ElementId bot() const { return candidate_.bot; }
  ElementId zero() const { return candidate_.zero; }
  ElementId one() const { return candidate_.one; }
  /// imp(bot, bot).
  ElementId top() const { return imp(bot(), bot()); }

  bool leq(ElementId x, ElementId y) const { return candidate_.order.leq(x, y); }
  ElementId meet(ElementId x, ElementId y) const { return meet_.at(x, y); }
  ElementId join(ElementId x, ElementId y) const { return join_.at(x, y); }
  ElementId mult(ElementId x, ElementId y) const { return candidate_.mult.at(x, y); }
  ElementId imp(ElementId x, ElementId y) const { return imp_.at(x, y); }
  /// x -> 0
  ElementId neg(ElementId x) const { return imp(x, zero()); }
  /// ~(~x * ~y)
  ElementId plus(ElementId x, ElementId y) const { return neg(mult(neg(x), neg(y))); }

  /// Candidate carrying the resolved implication table.
  AlgebraCandidate with_implication() const;

 private:
  void build_lattice_tables();

  AlgebraCandidate candidate_;
  OperationTable imp_;
  OperationTable meet_;
  OperationTable join_;
  bool implication_derived_ = false;
};

namespace detail {
struct Sealer;
}

/// A structure on which all four CL axioms have been verified. Only the
/// validator constructs these.
class FiniteCLAlgebra : public Structure {
 public:
  /// Maximum of the order; equals imp(bot, bot).
  ElementId top() const { return top_; }

 private:
  friend struct detail::Sealer;
  FiniteCLAlgebra(Structure s, ElementId top) : Structure(std::move(s)), top_(top) {}

  ElementId top_;
};

}  // namespace clalg

#endif  // CLALG_ALGEBRA_HPP_
