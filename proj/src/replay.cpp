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

#include "clalg/replay.hpp"

#include <string>

#include "clalg/identities.hpp"

namespace clalg {

namespace {

class Tables {
 public:
  explicit Tables(const AlgebraCandidate& c) : c_(c) {}

  bool leq(ElementId x, ElementId y) const { return c_.order.leq(x, y); }
  ElementId meet(ElementId x, ElementId y) const { return c_.order.meet(x, y); }
  ElementId join(ElementId x, ElementId y) const { return c_.order.join(x, y); }
  ElementId mult(ElementId x, ElementId y) const { return c_.mult.at(x, y); }
  ElementId imp(ElementId x, ElementId y) const {
    if (!c_.imp) throw ImplicationAbsent();
    return c_.imp->at(x, y);
  }
  ElementId neg(ElementId x) const { return imp(x, c_.zero); }
  ElementId plus(ElementId x, ElementId y) const { return neg(mult(neg(x), neg(y))); }
  bool related(Subset s, ElementId x, ElementId y) const {
    return s.contains(mult(x, neg(y))) && s.contains(mult(y, neg(x)));
  }

 private:
  const AlgebraCandidate& c_;
};

bool no_residual_at(const AlgebraCandidate& c, ElementId x, ElementId y) {
  Subset s = Subset::empty(c.size());
  for (std::size_t z = 0; z < c.size(); ++z) {
    if (c.order.leq(c.mult.at(x, ElementId(z)), y)) s.insert(ElementId(z));
  }
  for (ElementId m : s.elements()) {
    if (s.is_subset_of(c.order.down_set(m))) return false;
  }
  return true;
}

}  // namespace

bool replay(const AlgebraCandidate& c, const Witness& w, std::optional<Subset> subset) {
  const Tables t(c);
  const auto& a = w.args;
  const std::string& rule = w.rule;
  auto need = [&](std::size_t k) {
    if (a.size() != k) throw Error("witness " + rule + " expects " + std::to_string(k) + " arguments");
    for (ElementId e : a) {
      if (e.index() >= c.size()) throw Error("witness argument out of range");
    }
  };
  auto ideal = [&]() -> Subset {
    if (!subset) throw Error("witness " + rule + " needs a subset to replay against");
    return *subset;
  };

  // Order and lattice.
  if (rule == "reflexivity") return need(1), !t.leq(a[0], a[0]);
  if (rule == "antisymmetry") return need(2), a[0] != a[1] && t.leq(a[0], a[1]) && t.leq(a[1], a[0]);
  if (rule == "transitivity") return need(3), t.leq(a[0], a[1]) && t.leq(a[1], a[2]) && !t.leq(a[0], a[2]);
  if (rule == "no_join") return need(2), !c.order.try_join(a[0], a[1]).has_value();
  if (rule == "no_meet") return need(2), !c.order.try_meet(a[0], a[1]).has_value();
  if (rule == "bot_not_least") return need(1), !t.leq(c.bot, a[0]);
  // Monoid.
  if (rule == "commutativity") return need(2), t.mult(a[0], a[1]) != t.mult(a[1], a[0]);
  if (rule == "associativity") {
    need(3);
    return t.mult(t.mult(a[0], a[1]), a[2]) != t.mult(a[0], t.mult(a[1], a[2]));
  }
  if (rule == "unit") return need(1), t.mult(c.one, a[0]) != a[0] || t.mult(a[0], c.one) != a[0];
  // Residuation and involution.
  if (rule == "residuation") {
    need(3);
    return t.leq(t.mult(a[0], a[1]), a[2]) != t.leq(a[0], t.imp(a[1], a[2]));
  }
  if (rule == "no_residual" || rule == "implication_absent") return need(2), no_residual_at(c, a[0], a[1]);
  if (rule == "involution") return need(1), t.neg(t.neg(a[0])) != a[0];
  if (rule == "imp_mismatch") {
    need(2);
    Subset s = Subset::empty(c.size());
    for (std::size_t z = 0; z < c.size(); ++z) {
      if (t.leq(t.mult(a[0], ElementId(z)), a[1])) s.insert(ElementId(z));
    }
    return !s.contains(t.imp(a[0], a[1])) || !s.is_subset_of(c.order.down_set(t.imp(a[0], a[1])));
  }
  // Ideals.
  if (rule == "contains_zero") return need(1), !ideal().contains(c.zero);
  if (rule == "plus_closed") {
    need(2);
    return ideal().contains(a[0]) && ideal().contains(a[1]) && !ideal().contains(t.plus(a[0], a[1]));
  }
  if (rule == "join_closed") {
    need(2);
    return ideal().contains(a[0]) && ideal().contains(a[1]) && !ideal().contains(t.join(a[0], a[1]));
  }
  if (rule == "down_closed") return need(2), !ideal().contains(a[0]) && ideal().contains(a[1]) && t.leq(a[0], a[1]);
  if (rule == "prime") {
    need(2);
    return !ideal().contains(t.neg(t.imp(a[0], a[1]))) && !ideal().contains(t.neg(t.imp(a[1], a[0])));
  }
  if (rule == "distributive") {
    need(3);
    const ElementId lhs = t.meet(t.join(a[0], a[1]), t.join(a[0], a[2]));
    const ElementId rhs = t.join(a[0], t.meet(a[1], a[2]));
    return !ideal().contains(t.mult(lhs, t.neg(rhs)));
  }
  if (rule == "implicative") {
    need(3);
    const Subset s = ideal();
    return s.contains(t.neg(t.imp(a[0], t.imp(a[1], a[2])))) && s.contains(t.neg(t.imp(a[0], a[1]))) &&
           !s.contains(t.neg(t.imp(a[0], a[2])));
  }
  // Congruence.
  if (rule == "rho_reflexivity") return need(1), !t.related(ideal(), a[0], a[0]);
  if (rule == "rho_symmetry") return need(2), t.related(ideal(), a[0], a[1]) && !t.related(ideal(), a[1], a[0]);
  if (rule == "rho_transitivity") {
    need(3);
    const Subset s = ideal();
    return t.related(s, a[0], a[1]) && t.related(s, a[1], a[2]) && !t.related(s, a[0], a[2]);
  }
  if (rule.starts_with("compat_")) {
    const Subset s = ideal();
    if (rule == "compat_neg") return need(2), t.related(s, a[0], a[1]) && !t.related(s, t.neg(a[0]), t.neg(a[1]));
    need(4);
    if (!t.related(s, a[0], a[1]) || !t.related(s, a[2], a[3])) return false;
    ElementId lhs, rhs;
    if (rule == "compat_meet") {
      lhs = t.meet(a[0], a[2]), rhs = t.meet(a[1], a[3]);
    } else if (rule == "compat_join") {
      lhs = t.join(a[0], a[2]), rhs = t.join(a[1], a[3]);
    } else if (rule == "compat_mult") {
      lhs = t.mult(a[0], a[2]), rhs = t.mult(a[1], a[3]);
    } else if (rule == "compat_imp") {
      lhs = t.imp(a[0], a[2]), rhs = t.imp(a[1], a[3]);
    } else {
      throw Error("unknown witness rule " + rule);
    }
    return !t.related(s, lhs, rhs);
  }
  // Quotient claims, stated on class representatives.
  if (rule == "quotient_not_distributive") {
    need(3);
    const ElementId lhs = t.meet(a[0], t.join(a[1], a[2]));
    const ElementId rhs = t.join(t.meet(a[0], a[1]), t.meet(a[0], a[2]));
    return !t.related(ideal(), lhs, rhs);
  }
  if (rule == "quotient_not_linear") return need(2), !t.related(ideal(), t.meet(a[0], a[1]), a[0]) &&
                                                  !t.related(ideal(), t.meet(a[0], a[1]), a[1]);
  if (rule == "quotient_top_not_one") return need(2), !t.related(ideal(), a[0], a[1]);
  if (rule == "class_not_singleton") return need(2), a[0] != a[1] && t.related(ideal(), a[0], a[1]);
  if (rule == "order_criterion") {
    need(2);
    const bool by_order = t.related(ideal(), t.meet(a[0], a[1]), a[0]);
    return by_order != ideal().contains(t.neg(t.imp(a[0], a[1])));
  }
  // Identities.
  IdentityId id;
  try {
    id = identity_from_string(rule);
  } catch (const UnknownIdentity&) {
    throw Error("unknown witness rule " + rule);
  }
  need(arity(id));
  const Structure s(c);
  return !identity_holds_at(s, s.imp(s.bot(), s.bot()), id, a);
}

}  // namespace clalg
