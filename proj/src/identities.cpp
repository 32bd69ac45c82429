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

#include "clalg/identities.hpp"

#include <string>
#include <vector>

namespace clalg {

namespace {

struct IdentityInfo {
  IdentityId id;
  std::string_view tag;
  std::size_t arity;
};

constexpr std::array<IdentityInfo, 17> kInfo = {{
    {IdentityId::P2_1, "P2_1", 3},   {IdentityId::P2_2, "P2_2", 1},   {IdentityId::P2_3, "P2_3", 2},
    {IdentityId::P2_4, "P2_4", 2},   {IdentityId::P2_5, "P2_5", 3},   {IdentityId::P2_6, "P2_6", 1},
    {IdentityId::P2_7, "P2_7", 4},   {IdentityId::P2_8, "P2_8", 3},   {IdentityId::P2_9, "P2_9", 2},
    {IdentityId::P2_10, "P2_10", 2}, {IdentityId::P2_11, "P2_11", 2}, {IdentityId::P2_12, "P2_12", 2},
    {IdentityId::P2_13, "P2_13", 2}, {IdentityId::P2_14, "P2_14", 2}, {IdentityId::P2_15, "P2_15", 0},
    {IdentityId::P2_16, "P2_16", 0}, {IdentityId::LemmaMeetImp, "LEMMA_MEET_IMP", 3},
}};

const IdentityInfo& info(IdentityId id) { return kInfo[static_cast<std::size_t>(id)]; }

// Values worth showing next to a witness: both sides of the law.
std::vector<std::pair<std::string, ElementId>> sides(const Structure& a, ElementId top, IdentityId id,
                                                     std::span<const ElementId> v) {
  auto x = [&] { return v[0]; };
  auto y = [&] { return v[1]; };
  auto z = [&] { return v[2]; };
  switch (id) {
    case IdentityId::P2_1:
      return {{"x*(y v z)", a.mult(x(), a.join(y(), z()))}, {"(x*y) v (x*z)", a.join(a.mult(x(), y()), a.mult(x(), z()))}};
    case IdentityId::P2_2: return {{"bot->bot", a.imp(a.bot(), a.bot())}};
    case IdentityId::P2_3: return {{"x*y", a.mult(x(), y())}, {"x ^ y", a.meet(x(), y())}};
    case IdentityId::P2_4: return {{"x v y", a.join(x(), y())}, {"x*y", a.mult(x(), y())}};
    case IdentityId::P2_5:
      return {{"(x->y)*(y->z)", a.mult(a.imp(x(), y()), a.imp(y(), z()))}, {"x->z", a.imp(x(), z())}};
    case IdentityId::P2_6: return {{"1->x", a.imp(a.one(), x())}};
    case IdentityId::P2_7:
      return {{"x*y", a.mult(v[0], v[1])}, {"x1*y1", a.mult(v[2], v[3])},
              {"x1->y", a.imp(v[2], v[1])}, {"x->y1", a.imp(v[0], v[3])}};
    case IdentityId::P2_8:
      return {{"x->(y->z)", a.imp(x(), a.imp(y(), z()))}, {"(x*y)->z", a.imp(a.mult(x(), y()), z())}};
    case IdentityId::P2_9: return {{"x*(x->y)", a.mult(x(), a.imp(x(), y()))}};
    case IdentityId::P2_10: return {{"~x", a.neg(x())}, {"~y", a.neg(y())}};
    case IdentityId::P2_11:
      return {{"x v y", a.join(x(), y())}, {"~(~x ^ ~y)", a.neg(a.meet(a.neg(x()), a.neg(y())))}};
    case IdentityId::P2_12:
      return {{"x ^ y", a.meet(x(), y())}, {"~(~x v ~y)", a.neg(a.join(a.neg(x()), a.neg(y())))}};
    case IdentityId::P2_13: return {{"x->y", a.imp(x(), y())}, {"~(x*~y)", a.neg(a.mult(x(), a.neg(y())))}};
    case IdentityId::P2_14:
      return {{"~x->y", a.imp(a.neg(x()), y())}, {"~(~x*~y)", a.neg(a.mult(a.neg(x()), a.neg(y())))}};
    case IdentityId::P2_15: return {{"~top", a.neg(top)}};
    case IdentityId::P2_16: return {{"~top*top", a.mult(a.neg(top), top)}};
    case IdentityId::LemmaMeetImp:
      return {{"(z->x) ^ (z->y)", a.meet(a.imp(z(), x()), a.imp(z(), y()))}, {"z->(x ^ y)", a.imp(z(), a.meet(x(), y()))}};
  }
  return {};
}

}  // namespace

UnknownIdentity::UnknownIdentity(std::string_view tag) : Error("unknown identity '" + std::string(tag) + "'") {}

std::string_view to_string(IdentityId id) { return info(id).tag; }

IdentityId identity_from_string(std::string_view tag) {
  for (const auto& i : kInfo) {
    if (i.tag == tag) return i.id;
  }
  throw UnknownIdentity(tag);
}

std::size_t arity(IdentityId id) { return info(id).arity; }

bool identity_holds_at(const Structure& a, ElementId top, IdentityId id, std::span<const ElementId> v) {
  if (v.size() != arity(id)) throw Error("wrong number of arguments for " + std::string(to_string(id)));
  const auto one = a.one();
  switch (id) {
    case IdentityId::P2_1:
      return a.mult(v[0], a.join(v[1], v[2])) == a.join(a.mult(v[0], v[1]), a.mult(v[0], v[2]));
    case IdentityId::P2_2:
      return a.leq(v[0], a.imp(a.bot(), a.bot())) && a.imp(a.bot(), a.bot()) == top;
    case IdentityId::P2_3:
      return !(a.leq(v[0], one) && a.leq(v[1], one)) || a.leq(a.mult(v[0], v[1]), a.meet(v[0], v[1]));
    case IdentityId::P2_4:
      return !(a.leq(one, v[0]) && a.leq(one, v[1])) || a.leq(a.join(v[0], v[1]), a.mult(v[0], v[1]));
    case IdentityId::P2_5:
      return a.leq(a.mult(a.imp(v[0], v[1]), a.imp(v[1], v[2])), a.imp(v[0], v[2]));
    case IdentityId::P2_6:
      return a.imp(one, v[0]) == v[0];
    case IdentityId::P2_7: {
      const ElementId x = v[0], y = v[1], x1 = v[2], y1 = v[3];
      if (!(a.leq(x, x1) && a.leq(y, y1))) return true;
      return a.leq(a.mult(x, y), a.mult(x1, y1)) && a.leq(a.imp(x1, y), a.imp(x, y1));
    }
    case IdentityId::P2_8:
      return a.imp(v[0], a.imp(v[1], v[2])) == a.imp(a.mult(v[0], v[1]), v[2]);
    case IdentityId::P2_9:
      return a.leq(a.mult(v[0], a.imp(v[0], v[1])), v[1]);
    case IdentityId::P2_10:
      return !a.leq(v[0], v[1]) || a.leq(a.neg(v[1]), a.neg(v[0]));
    case IdentityId::P2_11:
      return a.join(v[0], v[1]) == a.neg(a.meet(a.neg(v[0]), a.neg(v[1])));
    case IdentityId::P2_12:
      return a.meet(v[0], v[1]) == a.neg(a.join(a.neg(v[0]), a.neg(v[1])));
    case IdentityId::P2_13:
      return a.imp(v[0], v[1]) == a.neg(a.mult(v[0], a.neg(v[1])));
    case IdentityId::P2_14:
      return a.imp(a.neg(v[0]), v[1]) == a.neg(a.mult(a.neg(v[0]), a.neg(v[1])));
    case IdentityId::P2_15:
      return a.neg(top) == a.bot();
    case IdentityId::P2_16:
      return a.mult(a.neg(top), top) == a.bot();
    case IdentityId::LemmaMeetImp:
      return a.meet(a.imp(v[2], v[0]), a.imp(v[2], v[1])) == a.imp(v[2], a.meet(v[0], v[1]));
  }
  return false;
}

Verdict check_identity(const FiniteCLAlgebra& alg, IdentityId id) {
  const std::size_t k = arity(id);
  const std::size_t n = alg.size();
  std::vector<ElementId> args(k, ElementId(0));
  // Odometer over n^k tuples, last position fastest: lexicographic order.
  while (true) {
    if (!identity_holds_at(alg, alg.top(), id, args)) {
      return Verdict::fail({std::string(to_string(id)), args, sides(alg, alg.top(), id, args)});
    }
    std::size_t pos = k;
    while (pos > 0) {
      --pos;
      if (args[pos].index() + 1 < n) {
        args[pos] = ElementId(args[pos].index() + 1);
        break;
      }
      args[pos] = ElementId(0);
      if (pos == 0) return Verdict::ok();
    }
    if (k == 0) return Verdict::ok();
  }
}

bool IdentityReport::all_pass() const {
  for (const auto& [id, v] : results) {
    if (!v.pass) return false;
  }
  return true;
}

IdentityReport run_identity_suite(const FiniteCLAlgebra& alg) {
  IdentityReport report;
  for (std::size_t i = 0; i < kAllIdentities.size(); ++i) {
    report.results[i] = {kAllIdentities[i], check_identity(alg, kAllIdentities[i])};
  }
  return report;
}

}  // namespace clalg
