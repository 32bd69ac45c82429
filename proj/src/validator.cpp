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

#include "clalg/validator.hpp"

#include <string>
#include <utility>

namespace clalg {

namespace detail {
struct Sealer {
  static FiniteCLAlgebra seal(Structure s, ElementId top) { return FiniteCLAlgebra(std::move(s), top); }
};
}  // namespace detail

namespace {

ElementId E(std::size_t i) { return ElementId(i); }

void require_shape(const AlgebraCandidate& c) {
  const std::size_t n = c.size();
  if (n == 0) throw Error("empty universe");
  if (n > kMaxElements) throw Error("universe exceeds " + std::to_string(kMaxElements) + " elements");
  if (c.order.size() != n || c.mult.size() != n || (c.imp && c.imp->size() != n)) {
    throw Error("table sizes do not match the universe");
  }
  for (ElementId d : {c.bot, c.zero, c.one}) {
    if (d.index() >= n) throw Error("designated element out of range");
  }
  auto check_cells = [n](const OperationTable& t) {
    for (ElementId v : t.cells()) {
      if (v.index() >= n) throw Error("table entry out of range");
    }
  };
  check_cells(c.mult);
  if (c.imp) check_cells(*c.imp);
}

}  // namespace

Verdict check_lattice(const AlgebraCandidate& c) {
  const auto& ord = c.order;
  const std::size_t n = c.size();
  for (std::size_t x = 0; x < n; ++x) {
    if (!ord.leq(E(x), E(x))) return Verdict::fail({"reflexivity", {E(x)}, {}});
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x != y && ord.leq(E(x), E(y)) && ord.leq(E(y), E(x))) {
        return Verdict::fail({"antisymmetry", {E(x), E(y)}, {}});
      }
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (!ord.leq(E(x), E(y))) continue;
      for (std::size_t z = 0; z < n; ++z) {
        if (ord.leq(E(y), E(z)) && !ord.leq(E(x), E(z))) {
          return Verdict::fail({"transitivity", {E(x), E(y), E(z)}, {}});
        }
      }
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (!ord.try_join(E(x), E(y))) return Verdict::fail({"no_join", {E(x), E(y)}, {}});
      if (!ord.try_meet(E(x), E(y))) return Verdict::fail({"no_meet", {E(x), E(y)}, {}});
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (!ord.leq(c.bot, E(x))) return Verdict::fail({"bot_not_least", {E(x)}, {{"bot", c.bot}}});
  }
  return Verdict::ok();
}

Verdict check_monoid(const AlgebraCandidate& c) {
  const auto& m = c.mult;
  const std::size_t n = c.size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      if (m.at(E(x), E(y)) != m.at(E(y), E(x))) {
        return Verdict::fail({"commutativity", {E(x), E(y)}, {{"x*y", m.at(E(x), E(y))}, {"y*x", m.at(E(y), E(x))}}});
      }
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        const ElementId left = m.at(m.at(E(x), E(y)), E(z));
        const ElementId right = m.at(E(x), m.at(E(y), E(z)));
        if (left != right) {
          return Verdict::fail({"associativity", {E(x), E(y), E(z)}, {{"(x*y)*z", left}, {"x*(y*z)", right}}});
        }
      }
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (m.at(c.one, E(x)) != E(x) || m.at(E(x), c.one) != E(x)) {
      return Verdict::fail({"unit", {E(x)}, {{"1*x", m.at(c.one, E(x))}, {"x*1", m.at(E(x), c.one)}}});
    }
  }
  return Verdict::ok();
}

Verdict check_residuation(const AlgebraCandidate& c, const OperationTable& imp) {
  const std::size_t n = c.size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const ElementId product = c.mult.at(E(x), E(y));
      for (std::size_t z = 0; z < n; ++z) {
        const ElementId residual = imp.at(E(y), E(z));
        if (c.order.leq(product, E(z)) != c.order.leq(E(x), residual)) {
          return Verdict::fail({"residuation", {E(x), E(y), E(z)}, {{"x*y", product}, {"y->z", residual}}});
        }
      }
    }
  }
  return Verdict::ok();
}

namespace {

Witness residual_witness(const char* rule, const NoResidual& nr) {
  Witness w{rule, {nr.x, nr.y}, {}};
  for (ElementId m : nr.maximal) w.values.emplace_back("maximal", m);
  return w;
}

}  // namespace

Verdict check_residuation(const AlgebraCandidate& c) {
  if (c.imp) return check_residuation(c, *c.imp);
  auto derived = derive_implication(c.order, c.mult);
  if (const auto* nr = std::get_if<NoResidual>(&derived)) return Verdict::fail(residual_witness("no_residual", *nr));
  return check_residuation(c, std::get<OperationTable>(derived));
}

Verdict check_involution(const AlgebraCandidate& c, const OperationTable& imp) {
  for (std::size_t x = 0; x < c.size(); ++x) {
    const ElementId negx = imp.at(E(x), c.zero);
    const ElementId negnegx = imp.at(negx, c.zero);
    if (negnegx != E(x)) return Verdict::fail({"involution", {E(x)}, {{"~x", negx}, {"~~x", negnegx}}});
  }
  return Verdict::ok();
}

ValidationOutcome validate(const AlgebraCandidate& c) {
  require_shape(c);
  ValidationOutcome out;
  ValidationReport& r = out.report;
  r.lattice = check_lattice(c);
  r.monoid = check_monoid(c);

  std::optional<OperationTable> imp = c.imp;
  if (!imp) {
    auto derived = derive_implication(c.order, c.mult);
    if (const auto* nr = std::get_if<NoResidual>(&derived)) {
      r.residuation = Verdict::fail(residual_witness("no_residual", *nr));
      r.involution = Verdict::fail(residual_witness("implication_absent", *nr));
      return out;
    }
    imp = std::get<OperationTable>(std::move(derived));
    r.implication_derived = true;
  }
  r.residuation = check_residuation(c, *imp);
  r.involution = check_involution(c, *imp);
  if (!r.all_pass()) return out;

  Structure s(c, *imp);
  const ElementId top = s.imp(s.bot(), s.bot());
  if (s.order().maximum() != top) throw Error("internal: bot->bot is not the maximum of a validated algebra");
  r.top = top;
  auto alg = detail::Sealer::seal(std::move(s), top);
  r.flags = StructuralFlags{is_linear(alg), is_distributive_lattice(alg), is_idempotent(alg),
                            is_residuated_lattice(alg)};
  out.algebra.emplace(std::move(alg));
  return out;
}

EquivalenceBroken::EquivalenceBroken(ElementId x_, ElementId y_)
    : Error("x*y <= x disagrees with top == one at (" + std::to_string(x_.index()) + ", " +
            std::to_string(y_.index()) + ")"),
      x(x_),
      y(y_) {}

bool is_residuated_lattice(const FiniteCLAlgebra& alg) {
  const bool integral = alg.top() == alg.one();
  std::optional<std::pair<ElementId, ElementId>> counterexample;
  for (ElementId x : alg.universe()) {
    for (ElementId y : alg.universe()) {
      if (!counterexample && !alg.leq(alg.mult(x, y), x)) counterexample.emplace(x, y);
    }
  }
  if (integral == counterexample.has_value()) {
    const auto [x, y] = counterexample.value_or(std::pair{alg.top(), alg.one()});
    throw EquivalenceBroken(x, y);
  }
  return integral;
}

bool is_idempotent(const Structure& alg) {
  for (ElementId x : alg.universe()) {
    if (alg.mult(x, x) != x) return false;
  }
  return true;
}

bool is_linear(const Structure& alg) { return alg.order().is_total(); }

bool is_distributive_lattice(const Structure& alg) {
  for (ElementId x : alg.universe()) {
    for (ElementId y : alg.universe()) {
      for (ElementId z : alg.universe()) {
        if (alg.meet(x, alg.join(y, z)) != alg.join(alg.meet(x, y), alg.meet(x, z))) return false;
      }
    }
  }
  return true;
}

}  // namespace clalg
