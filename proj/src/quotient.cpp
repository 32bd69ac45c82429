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

#include "clalg/quotient.hpp"

#include <array>

namespace clalg {

namespace {

using BinaryOp = ElementId (Structure::*)(ElementId, ElementId) const;

struct NamedOp {
  const char* rule;
  BinaryOp op;
};

constexpr std::array<NamedOp, 4> kBinaryOps = {{
    {"compat_meet", &Structure::meet},
    {"compat_join", &Structure::join},
    {"compat_mult", &Structure::mult},
    {"compat_imp", &Structure::imp},
}};

}  // namespace

bool related(const Structure& alg, Subset ideal, ElementId x, ElementId y) {
  return ideal.contains(alg.mult(x, alg.neg(y))) && ideal.contains(alg.mult(y, alg.neg(x)));
}

Congruence congruence_from_ideal(const Structure& alg, const Ideal& ideal) {
  const std::size_t n = alg.size();
  const Subset I = ideal.members();
  std::vector<std::uint64_t> rel(n, 0);
  for (ElementId x : alg.universe()) {
    for (ElementId y : alg.universe()) {
      if (related(alg, I, x, y)) rel[x.index()] |= std::uint64_t{1} << y.index();
    }
  }
  auto r = [&](ElementId x, ElementId y) { return ((rel[x.index()] >> y.index()) & 1U) != 0; };

  Congruence c;
  c.universe_size = n;
  c.ideal = I;
  c.equivalence = [&]() -> Verdict {
    for (ElementId x : alg.universe()) {
      if (!r(x, x)) return Verdict::fail({"rho_reflexivity", {x}, {}});
    }
    for (ElementId x : alg.universe()) {
      for (ElementId y : alg.universe()) {
        if (r(x, y) && !r(y, x)) return Verdict::fail({"rho_symmetry", {x, y}, {}});
      }
    }
    for (ElementId x : alg.universe()) {
      for (ElementId y : alg.universe()) {
        if (!r(x, y)) continue;
        for (ElementId z : alg.universe()) {
          if (r(y, z) && !r(x, z)) return Verdict::fail({"rho_transitivity", {x, y, z}, {}});
        }
      }
    }
    return Verdict::ok();
  }();

  c.compatibility = [&]() -> Verdict {
    for (const auto& [rule, op] : kBinaryOps) {
      for (ElementId x : alg.universe()) {
        for (ElementId x2 : alg.universe()) {
          if (!r(x, x2)) continue;
          for (ElementId y : alg.universe()) {
            for (ElementId y2 : alg.universe()) {
              if (!r(y, y2)) continue;
              const ElementId a = (alg.*op)(x, y);
              const ElementId b = (alg.*op)(x2, y2);
              if (!r(a, b)) return Verdict::fail({rule, {x, x2, y, y2}, {{"x op y", a}, {"x' op y'", b}}});
            }
          }
        }
      }
    }
    for (ElementId x : alg.universe()) {
      for (ElementId x2 : alg.universe()) {
        if (r(x, x2) && !r(alg.neg(x), alg.neg(x2))) {
          return Verdict::fail({"compat_neg", {x, x2}, {{"~x", alg.neg(x)}, {"~x'", alg.neg(x2)}}});
        }
      }
    }
    return Verdict::ok();
  }();

  if (c.equivalence.pass) {
    c.class_index.assign(n, n);
    for (ElementId x : alg.universe()) {
      if (c.class_index[x.index()] != n) continue;
      const Subset cls(n, rel[x.index()]);
      for (ElementId y : cls.elements()) c.class_index[y.index()] = c.classes.size();
      c.classes.push_back(cls);
    }
  }
  return c;
}

Subset class_of(const Congruence& cong, ElementId x) {
  if (cong.classes.empty()) throw Error("relation is not an equivalence; classes are undefined");
  return cong.classes.at(cong.class_index.at(x.index()));
}

NotACongruence::NotACongruence(Witness w) : Error("relation is not a congruence: " + w.rule), witness_(std::move(w)) {}

QuotientInvalid::QuotientInvalid(std::string what, ValidationReport report, std::optional<Witness> order_witness)
    : Error(std::move(what)), report_(std::move(report)), order_witness_(std::move(order_witness)) {}

QuotientAlgebra build_quotient(const Structure& alg, const Ideal& ideal) {
  Congruence cong = congruence_from_ideal(alg, ideal);
  if (!cong.equivalence.pass) throw NotACongruence(*cong.equivalence.witness);
  if (!cong.compatibility.pass) throw NotACongruence(*cong.compatibility.witness);

  const std::size_t k = cong.classes.size();
  std::vector<ElementId> rep(k);
  for (std::size_t c = 0; c < k; ++c) rep[c] = cong.classes[c].elements().front();
  auto cls = [&](ElementId x) { return ElementId(cong.class_index[x.index()]); };

  AlgebraCandidate q;
  q.name = alg.name() + "/" + format_subset(alg, ideal.members());
  for (std::size_t c = 0; c < k; ++c) q.elements.push_back("[" + alg.element_name(rep[c]) + "]");
  OperationTable meet(k), mult(k), imp(k);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      meet.set(ElementId(a), ElementId(b), cls(alg.meet(rep[a], rep[b])));
      mult.set(ElementId(a), ElementId(b), cls(alg.mult(rep[a], rep[b])));
      imp.set(ElementId(a), ElementId(b), cls(alg.imp(rep[a], rep[b])));
    }
  }
  q.order = OrderRelation(k);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      q.order.set_leq(ElementId(a), ElementId(b), meet.at(ElementId(a), ElementId(b)) == ElementId(a));
    }
  }
  q.covers = q.order.covers();
  q.mult = std::move(mult);
  q.imp = std::move(imp);
  q.bot = cls(alg.bot());
  q.zero = cls(alg.zero());
  q.one = cls(alg.one());

  ValidationOutcome outcome = validate(q);
  if (!outcome.algebra) {
    throw QuotientInvalid("quotient tables fail CL validation", outcome.report, std::nullopt);
  }
  for (ElementId x : alg.universe()) {
    for (ElementId y : alg.universe()) {
      const bool by_order = q.order.leq(cls(x), cls(y));
      const bool by_criterion = ideal.contains(alg.neg(alg.imp(x, y)));
      if (by_order != by_criterion) {
        throw QuotientInvalid("class order disagrees with ~(x->y) in I", outcome.report,
                              Witness{"order_criterion", {x, y}, {}});
      }
    }
  }

  std::vector<ElementId> projection;
  for (ElementId x : alg.universe()) projection.push_back(cls(x));
  return QuotientAlgebra{std::move(*outcome.algebra), std::move(projection), std::move(cong), outcome.report};
}

std::pair<bool, bool> check_order_criterion(const Structure& alg, const Ideal& ideal,
                                            const QuotientAlgebra& quotient, ElementId x, ElementId y) {
  const bool left = quotient.algebra.leq(quotient.projection[x.index()], quotient.projection[y.index()]);
  const bool right = ideal.contains(alg.neg(alg.imp(x, y)));
  return {left, right};
}

std::string_view to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::Holds: return "holds";
    case ClaimStatus::Violated: return "violated";
    case ClaimStatus::Vacuous: return "vacuous";
  }
  return "?";
}

bool TheoremReport::any_violated() const {
  for (const auto& c : claims) {
    if (c.status == ClaimStatus::Violated) return true;
  }
  return false;
}

TheoremReport theorem_suite(const FiniteCLAlgebra& alg, const Ideal& ideal) {
  const QuotientAlgebra q = build_quotient(alg, ideal);
  const auto& qa = q.algebra;
  auto rep = [&](ElementId c) { return q.congruence.classes[c.index()].elements().front(); };

  TheoremReport report;
  report.ideal = ideal.members();

  Claim& distributive = report.claims[0];
  distributive.name = "distributive_quotient";
  if (is_distributive_ideal(alg, ideal).pass) {
    distributive.status = ClaimStatus::Holds;
    for (ElementId x : qa.universe()) {
      for (ElementId y : qa.universe()) {
        for (ElementId z : qa.universe()) {
          if (distributive.witness) break;
          if (qa.meet(x, qa.join(y, z)) != qa.join(qa.meet(x, y), qa.meet(x, z))) {
            distributive.status = ClaimStatus::Violated;
            distributive.witness = Witness{"quotient_not_distributive", {rep(x), rep(y), rep(z)}, {}};
          }
        }
      }
    }
  }

  Claim& linear = report.claims[1];
  linear.name = "linear_quotient";
  if (is_prime(alg, ideal).pass) {
    linear.status = ClaimStatus::Holds;
    for (ElementId x : qa.universe()) {
      for (ElementId y : qa.universe()) {
        if (!linear.witness && !qa.leq(x, y) && !qa.leq(y, x)) {
          linear.status = ClaimStatus::Violated;
          linear.witness = Witness{"quotient_not_linear", {rep(x), rep(y)}, {}};
        }
      }
    }
  }

  Claim& residuated = report.claims[2];
  residuated.name = "residuated_quotient";
  if (is_affine(alg, ideal)) {
    residuated.status = ClaimStatus::Holds;
    if (qa.top() != qa.one()) {
      residuated.status = ClaimStatus::Violated;
      residuated.witness = Witness{"quotient_top_not_one", {alg.top(), alg.one()}, {}};
    }
  }

  Claim& singleton = report.claims[3];
  singleton.name = "singleton_classes";
  if (ideal.members() == alg.order().down_set(alg.zero())) {
    singleton.status = ClaimStatus::Holds;
    for (const Subset& c : q.congruence.classes) {
      if (c.count() > 1) {
        const auto members = c.elements();
        singleton.status = ClaimStatus::Violated;
        singleton.witness = Witness{"class_not_singleton", {members[0], members[1]}, {}};
        break;
      }
    }
  }
  return report;
}

}  // namespace clalg
