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

#ifndef CLALG_ORDER_HPP_
#define CLALG_ORDER_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "clalg/element.hpp"

namespace clalg {

/// Raised when a meet or join is requested on a pair that has none.
class NotALattice : public Error {
 public:
  NotALattice(ElementId x, ElementId y, bool join);
  ElementId x() const { return x_; }
  ElementId y() const { return y_; }
  bool join() const { return join_; }

 private:
  ElementId x_, y_;
  bool join_;
};

using Cover = std::pair<ElementId, ElementId>;

/// Binary relation on {0..n-1} stored as one bit row per element:
/// bit y of row x is set iff x <= y. Construction does not enforce the
/// partial-order axioms; the validator checks them.
class OrderRelation {
 public:
  OrderRelation() = default;
  explicit OrderRelation(std::size_t n);

  /// Reflexive-transitive closure of a covering list.
  static OrderRelation from_covers(std::size_t n, std::span<const Cover> covers);
  /// Total order 0 < 1 < ... < n-1.
  static OrderRelation chain(std::size_t n);

  std::size_t size() const { return n_; }
  bool leq(ElementId x, ElementId y) const { return (up_[x.index()] >> y.index()) & 1U; }
  void set_leq(ElementId x, ElementId y, bool value);

  Subset up_set(ElementId x) const { return Subset(n_, up_[x.index()]); }
  Subset down_set(ElementId x) const;

  bool is_partial_order() const;
  bool is_total() const;

  std::optional<ElementId> try_meet(ElementId x, ElementId y) const;
  std::optional<ElementId> try_join(ElementId x, ElementId y) const;
  ElementId meet(ElementId x, ElementId y) const;
  ElementId join(ElementId x, ElementId y) const;

  /// Unique least / greatest element, if any.
  std::optional<ElementId> minimum() const;
  std::optional<ElementId> maximum() const;
  /// Maximal elements of a subset (ascending index).
  std::vector<ElementId> maximal_elements(Subset s) const;

  /// Transitive reduction (Hasse edges), sorted by (lo, hi).
  std::vector<Cover> covers() const;

  /// Relabel: result.leq(perm[x], perm[y]) == leq(x, y).
  OrderRelation permuted(std::span<const ElementId> perm) const;

  friend bool operator==(const OrderRelation&, const OrderRelation&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> up_;
};

}  // namespace clalg

#endif  // CLALG_ORDER_HPP_
