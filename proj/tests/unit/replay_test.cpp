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
#include "support.hpp"

namespace clalg {
namespace {

ElementId E(std::size_t i) { return ElementId(i); }

TEST(Replay, RejectsNonWitnesses) {
  const auto c = testing::load_fixture("ex1_linear.cla");
  EXPECT_FALSE(replay(c, {"commutativity", {E(1), E(3)}, {}}));
  EXPECT_FALSE(replay(c, {"residuation", {E(1), E(2), E(3)}, {}}));
  EXPECT_FALSE(replay(c, {"involution", {E(3)}, {}}));
  EXPECT_FALSE(replay(c, {"P2_6", {E(3)}, {}}));
  const Subset i(5, 0b01111);  // bot, 0, 1, a
  EXPECT_FALSE(replay(c, {"prime", {E(1), E(3)}, {}}, i));
  EXPECT_FALSE(replay(c, {"down_closed", {E(0), E(1)}, {}}, i));
}

TEST(Replay, ConfirmsGenuineWitnesses) {
  auto c = testing::load_fixture("ex1_linear.cla");
  c.mult.set(E(1), E(3), E(2));  // 0*a becomes 1, leaving a*0 = 0
  EXPECT_TRUE(replay(c, {"commutativity", {E(1), E(3)}, {}}));
  const Subset not_closed(5, 0b01011);  // bot, 0, a
  const auto ex1 = testing::load_fixture("ex1_linear.cla");
  EXPECT_TRUE(replay(ex1, {"plus_closed", {E(3), E(3)}, {}}, not_closed));
  EXPECT_TRUE(replay(ex1, {"down_closed", {E(3), E(2)}, {}}, Subset(5, 0b00111)));
}

TEST(Replay, ErrorCases) {
  const auto c = testing::load_fixture("ex1_linear.cla");
  EXPECT_THROW(replay(c, {"no_such_rule", {}, {}}), Error);
  EXPECT_THROW(replay(c, {"prime", {E(0), E(1)}, {}}), Error);
  EXPECT_THROW(replay(c, {"commutativity", {E(0)}, {}}), Error);
  EXPECT_THROW(replay(c, {"commutativity", {E(0), E(9)}, {}}), Error);
}

}  // namespace
}  // namespace clalg
