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

#include <random>

#include "clalg/order.hpp"

namespace clalg {
namespace {

ElementId E(std::size_t i) { return ElementId(i); }

TEST(OrderRelation, ChainIsTotalWithEndpoints) {
  const auto chain = OrderRelation::chain(4);
  EXPECT_TRUE(chain.is_partial_order());
  EXPECT_TRUE(chain.is_total());
  EXPECT_EQ(chain.minimum(), E(0));
  EXPECT_EQ(chain.maximum(), E(3));
  EXPECT_EQ(chain.join(E(1), E(2)), E(2));
  EXPECT_EQ(chain.meet(E(1), E(2)), E(1));
  EXPECT_EQ(chain.covers().size(), 3U);
}

TEST(OrderRelation, FromCoversTakesTransitiveClosure) {
  const std::vector<Cover> covers = {{E(0), E(1)}, {E(1), E(2)}, {E(0), E(3)}, {E(3), E(2)}};
  const auto diamond = OrderRelation::from_covers(4, covers);
  EXPECT_TRUE(diamond.leq(E(0), E(2)));
  EXPECT_FALSE(diamond.leq(E(1), E(3)));
  EXPECT_FALSE(diamond.is_total());
  EXPECT_EQ(diamond.join(E(1), E(3)), E(2));
  EXPECT_EQ(diamond.meet(E(1), E(3)), E(0));
  EXPECT_EQ(diamond.covers(), (std::vector<Cover>{{E(0), E(1)}, {E(0), E(3)}, {E(1), E(2)}, {E(3), E(2)}}));
}

TEST(OrderRelation, CoversDropImpliedEdges) {
  const std::vector<Cover> covers = {{E(0), E(1)}, {E(1), E(2)}, {E(0), E(2)}};
  EXPECT_EQ(OrderRelation::from_covers(3, covers).covers().size(), 2U);
}

TEST(OrderRelation, MissingJoinIsReported) {
  // Two incomparable elements above a common bottom and no top.
  const std::vector<Cover> covers = {{E(0), E(1)}, {E(0), E(2)}};
  const auto vee = OrderRelation::from_covers(3, covers);
  EXPECT_FALSE(vee.try_join(E(1), E(2)).has_value());
  EXPECT_EQ(vee.try_meet(E(1), E(2)), E(0));
  EXPECT_THROW(vee.join(E(1), E(2)), NotALattice);
  EXPECT_FALSE(vee.maximum().has_value());
}

TEST(OrderRelation, CycleIsNotAPartialOrder) {
  const std::vector<Cover> covers = {{E(0), E(1)}, {E(1), E(0)}};
  EXPECT_FALSE(OrderRelation::from_covers(2, covers).is_partial_order());
}

TEST(OrderRelation, RejectsOversizedUniverse) { EXPECT_THROW(OrderRelation(kMaxElements + 1), Error); }

TEST(OrderRelation, UpAndDownSets) {
  const auto chain = OrderRelation::chain(5);
  EXPECT_EQ(chain.down_set(E(2)), Subset(5, 0b00111));
  EXPECT_EQ(chain.up_set(E(2)), Subset(5, 0b11100));
  EXPECT_EQ(chain.maximal_elements(Subset(5, 0b01011)), std::vector<ElementId>{E(3)});
}

TEST(OrderRelation, PermutedPreservesRelation) {
  std::mt19937 rng(7);
  const std::vector<Cover> covers = {{E(0), E(1)}, {E(1), E(2)}, {E(0), E(3)}, {E(3), E(2)}};
  const auto order = OrderRelation::from_covers(4, covers);
  for (int round = 0; round < 20; ++round) {
    std::vector<ElementId> perm = {E(0), E(1), E(2), E(3)};
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto moved = order.permuted(perm);
    for (std::size_t x = 0; x < 4; ++x) {
      for (std::size_t y = 0; y < 4; ++y) {
        EXPECT_EQ(moved.leq(perm[x], perm[y]), order.leq(E(x), E(y)));
      }
    }
  }
}

TEST(Subset, CanonicalOrderIsBitPattern) {
  EXPECT_LT(Subset(4, 0b0011), Subset(4, 0b0100));
  EXPECT_EQ(Subset(3, 0b1111).bits(), 0b111U);
  EXPECT_EQ(Subset::full(3).count(), 3U);
  EXPECT_TRUE(Subset(4, 0b0010).is_subset_of(Subset(4, 0b0110)));
}

}  // namespace
}  // namespace clalg
