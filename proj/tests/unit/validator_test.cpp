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

#include <gtest/gtest.h>

#include "clalg/replay.hpp"
#include "clalg/validator.hpp"
#include "support.hpp"

namespace clalg {
namespace {

using testing::load_fixture;

ElementId E(std::size_t i) { return ElementId(i); }

TEST(Validate, Ex1PassesAllFourAxioms) {
  const auto c = load_fixture("ex1_linear.cla");
  const auto outcome = validate(c);
  EXPECT_TRUE(outcome.report.lattice.pass);
  EXPECT_TRUE(outcome.report.monoid.pass);
  EXPECT_TRUE(outcome.report.residuation.pass);
  EXPECT_TRUE(outcome.report.involution.pass);
  EXPECT_FALSE(outcome.report.implication_derived);
  ASSERT_TRUE(outcome.algebra.has_value());
  EXPECT_EQ(outcome.algebra->top(), c.id_of("top"));
  EXPECT_EQ(outcome.algebra->top(), c.order.maximum());
}

TEST(Validate, Ex1PrintedImplicationIsTheResidual) {
  const auto c = load_fixture("ex1_linear.cla");
  const auto derived = derive_implication(c.order, c.mult);
  ASSERT_TRUE(std::holds_alternative<OperationTable>(derived));
  EXPECT_EQ(std::get<OperationTable>(derived), *c.imp);
}

TEST(Validate, Ex1Flags) {
  const auto flags = validate(load_fixture("ex1_linear.cla")).report.flags;
  ASSERT_TRUE(flags.has_value());
  EXPECT_TRUE(flags->linear);
  EXPECT_TRUE(flags->distributive_lattice);
  EXPECT_FALSE(flags->idempotent);
  EXPECT_FALSE(flags->residuated_lattice);
}

TEST(Validate, Ex2PrintedTablesFailResiduation) {
  const auto c = load_fixture("ex2_nonlinear.cla");
  const auto outcome = validate(c);
  EXPECT_TRUE(outcome.report.lattice.pass);
  EXPECT_TRUE(outcome.report.monoid.pass);
  ASSERT_FALSE(outcome.report.residuation.pass);
  EXPECT_FALSE(outcome.algebra.has_value());
  const Witness& w = *outcome.report.residuation.witness;
  EXPECT_EQ(w.rule, "residuation");
  EXPECT_EQ(w.args, (std::vector<ElementId>{c.id_of("1"), c.id_of("b"), c.id_of("0")}));
  EXPECT_TRUE(replay(c, w));
}

// No implication can repair ex2: its product is not monotone (1 <= b but
// b*1 = b is not below b*b = 0), so even the derived residual fails.
TEST(Validate, Ex2ProductIsNotResiduatedByAnyImplication) {
  auto c = testing::load_fixture("ex2_nonlinear.cla");
  const auto one = c.id_of("1"), b = c.id_of("b");
  ASSERT_TRUE(c.order.leq(one, b));
  EXPECT_FALSE(c.order.leq(c.mult.at(b, one), c.mult.at(b, b)));
  c.imp.reset();
  const auto outcome = validate(c);
  EXPECT_TRUE(outcome.report.implication_derived);
  ASSERT_FALSE(outcome.report.residuation.pass);
  EXPECT_EQ(outcome.report.residuation.witness->args, (std::vector<ElementId>{one, b, c.id_of("0")}));
  ASSERT_FALSE(outcome.report.involution.pass);
  EXPECT_EQ(outcome.report.involution.witness->args, std::vector<ElementId>{c.id_of("0")});
}

TEST(Validate, OneElementAlgebraPasses) {
  const auto outcome = validate(load_fixture("one_element.cla"));
  EXPECT_TRUE(outcome.report.all_pass());
  ASSERT_TRUE(outcome.algebra.has_value());
  EXPECT_EQ(outcome.algebra->size(), 1U);
}

AlgebraCandidate chain_candidate(std::size_t n) {
  AlgebraCandidate c;
  for (std::size_t i = 0; i < n; ++i) c.elements.push_back("e" + std::to_string(i));
  c.order = OrderRelation::chain(n);
  c.covers = c.order.covers();
  c.mult = OperationTable(n);
  c.bot = E(0);
  c.zero = E(0);
  c.one = E(n - 1);
  return c;
}

TEST(Validate, LeftProjectionReportsCommutativityFirst) {
  auto c = chain_candidate(3);
  for (std::size_t x = 0; x < 3; ++x) {
    for (std::size_t y = 0; y < 3; ++y) c.mult.set(E(x), E(y), E(x));
  }
  const auto report = validate(c).report;
  ASSERT_FALSE(report.monoid.pass);
  EXPECT_EQ(report.monoid.witness->rule, "commutativity");
  EXPECT_EQ(report.monoid.witness->args, (std::vector<ElementId>{E(0), E(1)}));
}

TEST(Validate, AntichainReportsMissingJoin) {
  AlgebraCandidate c;
  c.elements = {"p", "q"};
  c.order = OrderRelation(2);
  c.mult = OperationTable(2);
  const auto report = validate(c).report;
  ASSERT_FALSE(report.lattice.pass);
  EXPECT_EQ(report.lattice.witness->rule, "no_join");
  EXPECT_EQ(report.lattice.witness->args, (std::vector<ElementId>{E(0), E(1)}));
}

TEST(Validate, MissingResidualIsReported) {
  // Diamond bot < p, q < top; meet as product except p*p = bot. Then
  // {z : p*z <= bot} = {bot, p, q} has two maximal elements.
  AlgebraCandidate c;
  c.elements = {"bot", "p", "q", "top"};
  c.covers = {{E(0), E(1)}, {E(0), E(2)}, {E(1), E(3)}, {E(2), E(3)}};
  c.order = OrderRelation::from_covers(4, c.covers);
  c.mult = OperationTable(4);
  for (std::size_t x = 0; x < 4; ++x) {
    for (std::size_t y = 0; y < 4; ++y) c.mult.set(E(x), E(y), c.order.meet(E(x), E(y)));
  }
  c.mult.set(E(1), E(1), E(0));
  c.one = E(3);
  const auto report = validate(c).report;
  ASSERT_FALSE(report.residuation.pass);
  const Witness& w = *report.residuation.witness;
  EXPECT_EQ(w.rule, "no_residual");
  EXPECT_EQ(w.args, (std::vector<ElementId>{E(1), E(0)}));
  EXPECT_EQ(w.values, (std::vector<std::pair<std::string, ElementId>>{{"maximal", E(1)}, {"maximal", E(2)}}));
  ASSERT_FALSE(report.involution.pass);
  EXPECT_EQ(report.involution.witness->rule, "implication_absent");
  EXPECT_TRUE(replay(c, w));
  EXPECT_THROW(Structure{c}, ImplicationAbsent);
}

TEST(Validate, RejectsMalformedShapes) {
  auto c = chain_candidate(3);
  c.mult = OperationTable(2);
  EXPECT_THROW(validate(c), Error);
  auto d = chain_candidate(3);
  d.mult.set(E(0), E(0), E(9));
  EXPECT_THROW(validate(d), Error);
}

TEST(Structure, RejectsNonLattice) {
  AlgebraCandidate c;
  c.elements = {"b", "p", "q"};
  const std::vector<Cover> covers = {{E(0), E(1)}, {E(0), E(2)}};
  c.order = OrderRelation::from_covers(3, covers);
  c.mult = OperationTable(3);
  c.imp = OperationTable(3);
  EXPECT_THROW(Structure{c}, NotALattice);
}

TEST(StructuralFlags, BooleanAlgebraIsAResiduatedLattice) {
  const auto alg = testing::sealed_fixture("boolean4.cla");
  EXPECT_TRUE(is_idempotent(alg));
  EXPECT_TRUE(is_residuated_lattice(alg));
  EXPECT_FALSE(is_linear(alg));
  EXPECT_TRUE(is_distributive_lattice(alg));
}

TEST(StructuralFlags, ResiduatedLatticeMatchesIntegrality) {
  for (const char* file : testing::kValidFixtures) {
    const auto alg = testing::sealed_fixture(file);
    bool integral = true;
    for (ElementId x : alg.universe()) {
      for (ElementId y : alg.universe()) integral = integral && alg.leq(alg.mult(x, y), x);
    }
    EXPECT_EQ(is_residuated_lattice(alg), integral) << file;
    EXPECT_EQ(is_residuated_lattice(alg), alg.top() == alg.one()) << file;
  }
}

TEST(Structure, DerivedOperations) {
  const auto alg = testing::sealed_fixture("ex1_linear.cla");
  const auto a = alg.id_of("a");
  EXPECT_EQ(alg.neg(a), a);
  EXPECT_EQ(alg.neg(alg.id_of("0")), alg.id_of("1"));
  EXPECT_EQ(alg.plus(a, a), alg.id_of("1"));
  EXPECT_EQ(alg.imp(alg.bot(), alg.bot()), alg.id_of("top"));
}

}  // namespace
}  // namespace clalg
