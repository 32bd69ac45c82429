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

#include "clalg/algebra.hpp"

#include <utility>

namespace clalg {

ElementId AlgebraCandidate::id_of(std::string_view element_name) const {
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (elements[i] == element_name) return ElementId(i);
  }
  throw Error("unknown element '" + std::string(element_name) + "'");
}

std::variant<OperationTable, NoResidual> derive_implication(const OrderRelation& order,
                                                            const OperationTable& mult) {
  const std::size_t n = order.size();
  OperationTable imp(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      Subset residual = Subset::empty(n);
      for (std::size_t z = 0; z < n; ++z) {
        if (order.leq(mult.at(ElementId(x), ElementId(z)), ElementId(y))) residual.insert(ElementId(z));
      }
      auto maximal = order.maximal_elements(residual);
      if (maximal.size() != 1 || !residual.is_subset_of(order.down_set(maximal.front()))) {
        return NoResidual{ElementId(x), ElementId(y), std::move(maximal)};
      }
      imp.set(ElementId(x), ElementId(y), maximal.front());
    }
  }
  return imp;
}

Structure::Structure(AlgebraCandidate candidate) : candidate_(std::move(candidate)) {
  if (candidate_.imp) {
    imp_ = *candidate_.imp;
  } else {
    auto derived = derive_implication(candidate_.order, candidate_.mult);
    if (std::holds_alternative<NoResidual>(derived)) throw ImplicationAbsent();
    imp_ = std::get<OperationTable>(std::move(derived));
    implication_derived_ = true;
  }
  build_lattice_tables();
}

Structure::Structure(AlgebraCandidate candidate, OperationTable imp)
    : candidate_(std::move(candidate)), imp_(std::move(imp)) {
  implication_derived_ = !candidate_.imp || *candidate_.imp != imp_;
  build_lattice_tables();
}

void Structure::build_lattice_tables() {
  if (!candidate_.order.is_partial_order()) throw Error("order relation is not a partial order");
  const std::size_t n = size();
  meet_ = OperationTable(n);
  join_ = OperationTable(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      meet_.set(ElementId(x), ElementId(y), candidate_.order.meet(ElementId(x), ElementId(y)));
      join_.set(ElementId(x), ElementId(y), candidate_.order.join(ElementId(x), ElementId(y)));
    }
  }
}

std::vector<ElementId> Structure::universe() const {
  std::vector<ElementId> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.emplace_back(i);
  return out;
}

AlgebraCandidate Structure::with_implication() const {
  AlgebraCandidate c = candidate_;
  c.imp = imp_;
  return c;
}

}  // namespace clalg
