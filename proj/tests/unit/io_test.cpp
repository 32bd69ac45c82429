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
#include <fstream>
#include <sstream>

#include "clalg/io.hpp"
#include "clalg/quotient.hpp"
#include "support.hpp"

namespace clalg {
namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::size_t count_edges(const std::string& dot) {
  std::size_t n = 0;
  for (std::size_t pos = dot.find("->"); pos != std::string::npos; pos = dot.find("->", pos + 2)) ++n;
  return n;
}

const char* kMinimal =
    "algebra tiny\n"
    "elements: lo hi\n"
    "bot: lo\n"
    "zero: lo\n"
    "one: hi\n"
    "cover: lo hi\n"
    "mult:\n"
    "lo lo\n"
    "lo hi\n"
    "end\n";

std::string replace_line(std::string text, const std::string& from, const std::string& to) {
  text.replace(text.find(from), from.size(), to);
  return text;
}

TEST(Parse, Ex1Fixture) {
  const auto c = testing::load_fixture("ex1_linear.cla");
  EXPECT_EQ(c.name, "ex1_linear");
  EXPECT_EQ(c.size(), 5U);
  EXPECT_EQ(c.covers.size(), 4U);
  EXPECT_TRUE(c.order.is_total());
  EXPECT_TRUE(c.imp.has_value());
}

TEST(Parse, ImpSectionIsOptional) {
  const auto c = parse_algebra(kMinimal);
  EXPECT_FALSE(c.imp.has_value());
  EXPECT_EQ(c.one, c.id_of("hi"));
}

TEST(Parse, CommentsAndBlankLines) {
  const std::string text = std::string("# header\n\n") + replace_line(kMinimal, "mult:\n", "mult:   # table\n");
  EXPECT_EQ(parse_algebra(text), parse_algebra(kMinimal));
}

void expect_error(const std::string& text, std::size_t line, const std::string& message) {
  try {
    parse_algebra(text);
    ADD_FAILURE() << "no error for: " << message;
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), line);
    EXPECT_EQ(e.message(), message);
  }
}

TEST(Parse, Errors) {
  expect_error(replace_line(kMinimal, "one: hi\n", ""), 5, "one: required");
  expect_error(replace_line(kMinimal, "elements: lo hi", "elements: lo lo"), 2, "duplicate element 'lo'");
  expect_error(replace_line(kMinimal, "cover: lo hi", "cover: lo mid"), 6, "unknown element 'mid'");
  expect_error(replace_line(kMinimal, "lo hi\nend", "lo\nend"), 9, "mult row has 1 entries, expected 2");
  expect_error(std::string(kMinimal) + "extra\n", 11, "content after end");
  expect_error(replace_line(kMinimal, "elements: lo hi", "elements: lo h-i"), 2, "invalid element name 'h-i'");
  expect_error(replace_line(kMinimal, "lo hi\nend", "end"), 9, "mult table has 1 rows, expected 2");
  expect_error("", 1, "algebra required");
}

TEST(RoundTrip, FixturesAreFixedPoints) {
  for (const char* file : testing::kAllFixtures) {
    const auto parsed = testing::load_fixture(file);
    const std::string text = serialize_algebra(parsed);
    EXPECT_EQ(parse_algebra(text), parsed) << file;
    EXPECT_EQ(serialize_algebra(parse_algebra(text)), text) << file;
  }
}

TEST(RoundTrip, BracketedNamesAreRejected) {
  const auto alg = testing::sealed_fixture("ex1_linear.cla");
  const auto q = build_quotient(alg, zero_downset(alg));
  EXPECT_THROW(serialize_algebra(q.algebra.candidate()), Error);
}

TEST(Dot, EdgeCountsFollowCovers) {
  EXPECT_EQ(count_edges(export_dot(testing::sealed_fixture("ex1_linear.cla"))), 4U);
  EXPECT_EQ(count_edges(export_dot(Structure(testing::load_fixture("ex2_nonlinear.cla")))), 6U);
}

TEST(Dot, AnnotatesDesignatedElements) {
  const std::string dot = export_dot(testing::sealed_fixture("ex1_linear.cla"));
  EXPECT_NE(dot.find("rankdir=BT"), std::string::npos);
  EXPECT_NE(dot.find("label=\"bot (bot)\""), std::string::npos);
  EXPECT_NE(dot.find("label=\"0 (0)\""), std::string::npos);
  EXPECT_NE(dot.find("label=\"top (top)\""), std::string::npos);
  const std::string single = export_dot(testing::sealed_fixture("one_element.cla"));
  EXPECT_NE(single.find("e (bot,0,1,top)"), std::string::npos);
  EXPECT_EQ(count_edges(single), 0U);
}

TEST(Dot, QuotientExport) {
  const auto alg = testing::sealed_fixture("ex1_linear.cla");
  const auto q = build_quotient(alg, certify_ideal(alg, testing::subset_of(alg, {"bot", "0", "1", "a"})));
  const std::string dot = export_dot(q.algebra);
  EXPECT_EQ(count_edges(dot), 2U);
  EXPECT_NE(dot.find("[0] (0,1)"), std::string::npos);
}

TEST(Load, MissingFile) { EXPECT_THROW(load_algebra("/nonexistent/x.cla"), Error); }

}  // namespace
}  // namespace clalg
