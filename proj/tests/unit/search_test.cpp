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

#include <algorithm>
#include <random>

#include "clalg/search.hpp"
#include "oracle.hpp"
#include "support.hpp"

namespace clalg {
namespace {

ElementId E(std::size_t i) { return ElementId(i); }

TEST(EnumerateLattices, KnownCounts) {
  const std::size_t expected[] = {0, 0, 1, 1, 2, 5, 15, 53, 222};
  for (std::size_t n = 2; n <= 8; ++n) EXPECT_EQ(enumerate_lattices(n).size(), expected[n]) << n;
}

TEST(EnumerateLattices, CanonicalEndpointsAndOrder) {
  for (const auto& lattice : enumerate_lattices(5)) {
    EXPECT_EQ(lattice.minimum(), E(0));
    EXPECT_EQ(lattice.maximum(), E(4));
  }
  EXPECT_TRUE(enumerate_lattices(3).front().is_total());
}

TEST(EnumerateLattices, SizeBounds) {
  EXPECT_THROW(enumerate_lattices(1), SizeOutOfRange);
  EXPECT_THROW(enumerate_lattices(9), SizeOutOfRange);
}

TEST(CanonicalForm, InvariantUnderRelabeling) {
  std::mt19937 rng(11);
  for (const char* file : testing::kValidFixtures) {
    const auto alg = testing::sealed_fixture(file);
    const CanonicalForm form = canonical_form(alg);
    const auto resolved = alg.with_implication();
    for (int round = 0; round < 10; ++round) {
      std::vector<ElementId> perm;
      for (std::size_t i = 0; i < alg.size(); ++i) perm.push_back(E(i));
      std::shuffle(perm.begin(), perm.end(), rng);
      const Structure moved(relabeled(resolved, perm));
      EXPECT_EQ(canonical_form(moved), form) << file;
    }
  }
}

TEST(CanonicalForm, DistinguishesFixtures) {
  const auto ex1 = testing::sealed_fixture("ex1_linear.cla");
  const Structure ex2(testing::load_fixture("ex2_nonlinear.cla"));
  EXPECT_NE(canonical_form(ex1), canonical_form(ex2));
  EXPECT_NE(canonical_form(testing::sealed_fixture("two_element.cla")),
            canonical_form(testing::sealed_fixture("three_chain.cla")));
}

TEST(CanonicalForm, TextEncoding) {
  const auto text = canonical_form(testing::sealed_fixture("two_element.cla")).to_string();
  EXPECT_EQ(std::count(text.begin(), text.end(), ';'), 4);
  EXPECT_EQ(text.substr(0, 2), "2;");
}

TEST(CompleteToCl, OneElementLattice) {
  EXPECT_EQ(complete_to_cl(OrderRelation::chain(1), E(0), E(0)).size(), 1U);
}

TEST(CompleteToCl, UnitAtBottomIsImpossible) {
  for (std::size_t z = 0; z < 3; ++z) EXPECT_TRUE(complete_to_cl(OrderRelation::chain(3), E(z), E(0)).empty());
}

TEST(CompleteToCl, FindsEx1OnItsChain) {
  const auto ex1 = testing::sealed_fixture("ex1_linear.cla");
  const CanonicalForm target = canonical_form(ex1);
  // Along the chain, 0 is the second element and 1 the fourth.
  const auto found = complete_to_cl(OrderRelation::chain(5), E(1), E(3));
  EXPECT_TRUE(std::any_of(found.begin(), found.end(),
                          [&](const FiniteCLAlgebra& a) { return canonical_form(a) == target; }));
}

TEST(CompleteToCl, TwoChainWithZeroEqualOneAtTop) {
  // One free entry, bot*bot; keep the choices the oracle accepts.
  std::size_t accepted = 0;
  for (std::size_t v = 0; v < 2; ++v) {
    AlgebraCandidate c;
    c.elements = {"b", "t"};
    c.order = OrderRelation::chain(2);
    c.covers = c.order.covers();
    c.bot = E(0);
    c.zero = E(1);
    c.one = E(1);
    c.mult = OperationTable(2);
    c.mult.set(E(0), E(0), E(v));
    c.mult.set(E(0), E(1), E(0));
    c.mult.set(E(1), E(0), E(0));
    c.mult.set(E(1), E(1), E(1));
    if (oracle::oracle_validate(c).all_pass()) ++accepted;
  }
  EXPECT_EQ(complete_to_cl(OrderRelation::chain(2), E(1), E(1)).size(), accepted);
}

TEST(CompleteToCl, EveryResultRevalidates) {
  for (const auto& lattice : enumerate_lattices(4)) {
    for (std::size_t z = 0; z < 4; ++z) {
      for (std::size_t u = 0; u < 4; ++u) {
        for (const auto& alg : complete_to_cl(lattice, E(z), E(u))) {
          EXPECT_TRUE(validate(alg.with_implication()).report.all_pass());
          EXPECT_TRUE(oracle::oracle_validate(alg.with_implication()).all_pass());
        }
      }
    }
  }
}

std::string census_text(const Census& c) {
  std::string out;
  for (const auto& r : c.rows) out += std::to_string(r.lattice_index) + ":" + std::to_string(r.count) + "\n";
  for (const auto& e : c.algebras) out += std::to_string(e.lattice_index) + " " + e.form.to_string() + "\n";
  return out;
}

TEST(Census, SmallTotals) {
  const std::size_t expected[] = {0, 0, 1, 2, 9, 21};
  for (std::size_t n = 2; n <= 5; ++n) {
    SearchConfig config;
    config.size = n;
    EXPECT_EQ(count_cl_algebras(config).total, expected[n]) << n;
  }
}

TEST(Census, DeterministicAcrossThreadCounts) {
  SearchConfig config;
  config.size = 5;
  const std::string serial = census_text(count_cl_algebras(config));
  for (unsigned threads : {2U, 3U, 8U}) {
    config.threads = threads;
    EXPECT_EQ(census_text(count_cl_algebras(config)), serial) << threads;
  }
}

TEST(Census, MaxResultsCapsOnlyTheListing) {
  SearchConfig config;
  config.size = 5;
  const Census full = count_cl_algebras(config);
  config.max_results = 3;
  const Census capped = count_cl_algebras(config);
  EXPECT_EQ(capped.algebras.size(), 3U);
  EXPECT_TRUE(capped.truncated);
  EXPECT_EQ(capped.total, full.total);
  EXPECT_EQ(capped.rows, full.rows);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(capped.algebras[i].form, full.algebras[i].form);
}

TEST(Census, CountOnlyOmitsAlgebras) {
  SearchConfig config;
  config.size = 4;
  config.count_only = true;
  const Census c = count_cl_algebras(config);
  EXPECT_TRUE(c.algebras.empty());
  EXPECT_EQ(c.total, 9U);
}

TEST(Census, FixedLattice) {
  SearchConfig config;
  config.size = 5;
  config.lattice = OrderRelation::chain(5);
  const Census c = count_cl_algebras(config);
  ASSERT_EQ(c.rows.size(), 1U);
  SearchConfig all;
  all.size = 5;
  const Census full = count_cl_algebras(all);
  const auto chain = std::find_if(full.lattices.begin(), full.lattices.end(),
                                  [](const OrderRelation& l) { return l.is_total(); });
  ASSERT_NE(chain, full.lattices.end());
  EXPECT_EQ(c.rows[0].count, full.rows[static_cast<std::size_t>(chain - full.lattices.begin())].count);
  config.lattice = OrderRelation::chain(4);
  EXPECT_THROW(count_cl_algebras(config), Error);
}

TEST(Census, SizeCaps) {
  SearchConfig config;
  config.size = 7;
  EXPECT_THROW(count_cl_algebras(config), SizeOutOfRange);
  config.size = 1;
  EXPECT_THROW(count_cl_algebras(config), SizeOutOfRange);
  config.size = 9;
  config.allow_large = true;
  EXPECT_THROW(count_cl_algebras(config), SizeOutOfRange);
}

}  // namespace
}  // namespace clalg
