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

#include "clalg/order.hpp"

#include <string>

namespace clalg {

NotALattice::NotALattice(ElementId x, ElementId y, bool join)
    : Error(std::string(join ? "no unique join" : "no unique meet") + " for elements " +
            std::to_string(x.index()) + " and " + std::to_string(y.index())),
      x_(x),
      y_(y),
      join_(join) {}

OrderRelation::OrderRelation(std::size_t n) : n_(n), up_(n, 0) {
  if (n > kMaxElements) throw Error("universe exceeds " + std::to_string(kMaxElements) + " elements");
  for (std::size_t i = 0; i < n; ++i) up_[i] = std::uint64_t{1} << i;
}

OrderRelation OrderRelation::from_covers(std::size_t n, std::span<const Cover> covers) {
  OrderRelation r(n);
  for (const auto& [lo, hi] : covers) r.up_[lo.index()] |= std::uint64_t{1} << hi.index();
  // Warshall on bit rows.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if ((r.up_[i] >> k) & 1U) r.up_[i] |= r.up_[k];
    }
  }
  return r;
}

OrderRelation OrderRelation::chain(std::size_t n) {
  OrderRelation r(n);
  for (std::size_t i = 0; i < n; ++i) r.up_[i] = Subset::mask_for(n) & ~Subset::mask_for(i);
  return r;
}

void OrderRelation::set_leq(ElementId x, ElementId y, bool value) {
  const std::uint64_t bit = std::uint64_t{1} << y.index();
  if (value) {
    up_[x.index()] |= bit;
  } else {
    up_[x.index()] &= ~bit;
  }
}

Subset OrderRelation::down_set(ElementId x) const {
  Subset s = Subset::empty(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (leq(ElementId(i), x)) s.insert(ElementId(i));
  }
  return s;
}

bool OrderRelation::is_partial_order() const {
  for (std::size_t i = 0; i < n_; ++i) {
    if (!leq(ElementId(i), ElementId(i))) return false;
    for (std::size_t j = 0; j < n_; ++j) {
      if (i != j && leq(ElementId(i), ElementId(j)) && leq(ElementId(j), ElementId(i))) return false;
      if (leq(ElementId(i), ElementId(j)) && (up_[j] & ~up_[i]) != 0) return false;
    }
  }
  return true;
}

bool OrderRelation::is_total() const {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      if (!leq(ElementId(i), ElementId(j)) && !leq(ElementId(j), ElementId(i))) return false;
    }
  }
  return true;
}

std::optional<ElementId> OrderRelation::try_meet(ElementId x, ElementId y) const {
  const Subset lower = down_set(x) & down_set(y);
  for (ElementId c : lower.elements()) {
    if (lower.is_subset_of(down_set(c))) return c;
  }
  return std::nullopt;
}

std::optional<ElementId> OrderRelation::try_join(ElementId x, ElementId y) const {
  const Subset upper = up_set(x) & up_set(y);
  for (ElementId c : upper.elements()) {
    if (upper.is_subset_of(up_set(c))) return c;
  }
  return std::nullopt;
}

ElementId OrderRelation::meet(ElementId x, ElementId y) const {
  if (auto m = try_meet(x, y)) return *m;
  throw NotALattice(x, y, false);
}

ElementId OrderRelation::join(ElementId x, ElementId y) const {
  if (auto j = try_join(x, y)) return *j;
  throw NotALattice(x, y, true);
}

std::optional<ElementId> OrderRelation::minimum() const {
  for (std::size_t i = 0; i < n_; ++i) {
    if (up_set(ElementId(i)).is_full()) return ElementId(i);
  }
  return std::nullopt;
}

std::optional<ElementId> OrderRelation::maximum() const {
  for (std::size_t i = 0; i < n_; ++i) {
    if (down_set(ElementId(i)).is_full()) return ElementId(i);
  }
  return std::nullopt;
}

std::vector<ElementId> OrderRelation::maximal_elements(Subset s) const {
  std::vector<ElementId> out;
  for (ElementId c : s.elements()) {
    bool maximal = true;
    for (ElementId d : s.elements()) {
      if (d != c && leq(c, d)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(c);
  }
  return out;
}

std::vector<Cover> OrderRelation::covers() const {
  std::vector<Cover> out;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (i == j || !leq(ElementId(i), ElementId(j))) continue;
      bool direct = true;
      for (std::size_t k = 0; k < n_ && direct; ++k) {
        if (k != i && k != j && leq(ElementId(i), ElementId(k)) && leq(ElementId(k), ElementId(j))) {
          direct = false;
        }
      }
      if (direct) out.emplace_back(ElementId(i), ElementId(j));
    }
  }
  return out;
}

OrderRelation OrderRelation::permuted(std::span<const ElementId> perm) const {
  OrderRelation r(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      r.set_leq(perm[i], perm[j], leq(ElementId(i), ElementId(j)));
    }
  }
  return r;
}

}  // namespace clalg
