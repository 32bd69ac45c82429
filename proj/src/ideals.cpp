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

#include "clalg/ideals.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace clalg {

NotAnIdeal::NotAnIdeal(Witness w) : Error("subset is not an ideal: " + w.rule), witness_(std::move(w)) {}

Verdict is_ideal(const Structure& alg, Subset s) {
  if (s.is_empty()) throw EmptySubset();
  if (!s.contains(alg.zero())) return Verdict::fail({"contains_zero", {alg.zero()}, {}});
  const auto members = s.elements();
  for (ElementId x : members) {
    for (ElementId y : members) {
      const ElementId sum = alg.plus(x, y);
      if (!s.contains(sum)) return Verdict::fail({"plus_closed", {x, y}, {{"x+y", sum}}});
    }
  }
  for (ElementId x : members) {
    for (ElementId y : members) {
      const ElementId j = alg.join(x, y);
      if (!s.contains(j)) return Verdict::fail({"join_closed", {x, y}, {{"x v y", j}}});
    }
  }
  for (ElementId x : alg.universe()) {
    if (s.contains(x)) continue;
    for (ElementId y : members) {
      if (alg.leq(x, y)) return Verdict::fail({"down_closed", {x, y}, {}});
    }
  }
  return Verdict::ok();
}

Ideal certify_ideal(const Structure& alg, Subset s) {
  Verdict v = is_ideal(alg, s);
  if (!v.pass) throw NotAnIdeal(std::move(*v.witness));
  return Ideal(s);
}

Ideal generated_ideal(const Structure& alg, Subset seed) {
  Subset s = seed;
  s.insert(alg.zero());
  for (bool changed = true; changed;) {
    const Subset before = s;
    for (ElementId y : s.elements()) s = s | alg.order().down_set(y);
    const auto members = s.elements();
    for (ElementId x : members) {
      for (ElementId y : members) {
        s.insert(alg.plus(x, y));
        s.insert(alg.join(x, y));
      }
    }
    changed = s != before;
  }
  return certify_ideal(alg, s);
}

std::vector<Ideal> all_ideals(const Structure& alg) {
  const std::size_t n = alg.size();
  // Largest down-sets first is a reversed linear extension.
  std::vector<ElementId> top_down = alg.universe();
  std::stable_sort(top_down.begin(), top_down.end(), [&](ElementId a, ElementId b) {
    return alg.order().down_set(a).count() > alg.order().down_set(b).count();
  });
  std::vector<std::uint64_t> below(n);
  for (ElementId x : alg.universe()) below[x.index()] = alg.order().down_set(x).bits();

  std::vector<Ideal> out;
  std::function<void(std::size_t, std::uint64_t)> visit = [&](std::size_t k, std::uint64_t included) {
    if (k == n) {
      const Subset s(n, included);
      if (!s.is_empty() && is_ideal(alg, s).pass) out.push_back(certify_ideal(alg, s));
      return;
    }
    const std::size_t e = top_down[k].index();
    if ((included >> e) & 1U) {
      visit(k + 1, included);
      return;
    }
    visit(k + 1, included);
    visit(k + 1, included | below[e]);
  };
  visit(0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

Verdict is_prime(const Structure& alg, const Ideal& ideal) {
  for (ElementId x : alg.universe()) {
    for (ElementId y : alg.universe()) {
      const ElementId xy = alg.neg(alg.imp(x, y));
      const ElementId yx = alg.neg(alg.imp(y, x));
      if (!ideal.contains(xy) && !ideal.contains(yx)) {
        return Verdict::fail({"prime", {x, y}, {{"~(x->y)", xy}, {"~(y->x)", yx}}});
      }
    }
  }
  return Verdict::ok();
}

Verdict is_distributive_ideal(const Structure& alg, const Ideal& ideal) {
  for (ElementId x : alg.universe()) {
    for (ElementId y : alg.universe()) {
      for (ElementId z : alg.universe()) {
        const ElementId lhs = alg.meet(alg.join(x, y), alg.join(x, z));
        const ElementId rhs = alg.join(x, alg.meet(y, z));
        const ElementId term = alg.mult(lhs, alg.neg(rhs));
        if (!ideal.contains(term)) {
          return Verdict::fail({"distributive", {x, y, z},
                                {{"(x v y) ^ (x v z)", lhs}, {"x v (y ^ z)", rhs}, {"term", term}}});
        }
      }
    }
  }
  return Verdict::ok();
}

Verdict is_implicative(const Structure& alg, Subset s) {
  if (!s.contains(alg.zero())) throw ZeroMissing();
  for (ElementId x : alg.universe()) {
    for (ElementId y : alg.universe()) {
      const ElementId a = alg.neg(alg.imp(x, y));
      if (!s.contains(a)) continue;
      for (ElementId z : alg.universe()) {
        const ElementId b = alg.neg(alg.imp(x, alg.imp(y, z)));
        const ElementId c = alg.neg(alg.imp(x, z));
        if (s.contains(b) && !s.contains(c)) {
          return Verdict::fail({"implicative", {x, y, z}, {{"~(x->(y->z))", b}, {"~(x->y)", a}, {"~(x->z)", c}}});
        }
      }
    }
  }
  return Verdict::ok();
}

bool is_affine(const Structure& alg, const Ideal& ideal) { return ideal.contains(alg.mult(alg.top(), alg.zero())); }

Ideal zero_downset(const FiniteCLAlgebra& alg) { return certify_ideal(alg, alg.order().down_set(alg.zero())); }

IdealClassification classify(const Structure& alg, const Ideal& ideal) {
  IdealClassification c;
  c.is_prime = is_prime(alg, ideal).pass;
  c.is_distributive = is_distributive_ideal(alg, ideal).pass;
  c.is_implicative = is_implicative(alg, ideal.members()).pass;
  c.is_affine = is_affine(alg, ideal);
  c.is_zero_downset = ideal.members() == alg.order().down_set(alg.zero());
  return c;
}

Subset parse_subset(const Structure& alg, std::string_view list) {
  Subset s = Subset::empty(alg.size());
  while (!list.empty()) {
    const auto comma = list.find(',');
    const std::string_view item = list.substr(0, comma);
    if (item.empty()) throw Error("empty element name in list");
    s.insert(alg.id_of(item));
    if (comma == std::string_view::npos) break;
    list.remove_prefix(comma + 1);
    if (list.empty()) throw Error("trailing comma in element list");
  }
  return s;
}

std::string format_subset(const Structure& alg, Subset s) {
  std::string out = "{";
  bool first = true;
  for (ElementId x : s.elements()) {
    if (!first) out += ",";
    out += alg.element_name(x);
    first = false;
  }
  return out + "}";
}

}  // namespace clalg
