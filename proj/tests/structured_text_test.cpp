//
// Copyright 2026 The Diacritica Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include "diacritica/structured_text.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

#include "diacritica/parallel.hpp"

namespace diacritica {
namespace {

TEST(StructuredDocTest, ParsesRootAndSections) {
  const auto doc = StructuredDoc::parse(
      "# comment\n"
      "name = \"ça \\\"va\\\"\"\n"
      "count = 42\n"
      "\n"
      "[paths.train]\n"
      "ratio = 0.25  # trailing\n"
      "enabled = true\n");
  EXPECT_EQ(doc.get("", "name").as_string(), "ça \"va\"");
  EXPECT_EQ(doc.get("", "count").as_int(), 42);
  EXPECT_TRUE(doc.has_section("paths.train"));
  EXPECT_DOUBLE_EQ(doc.get("paths.train", "ratio").as_double(), 0.25);
  EXPECT_TRUE(doc.get("paths.train", "enabled").as_bool());
  EXPECT_EQ(doc.find("paths.train", "missing"), nullptr);
}

TEST(StructuredDocTest, RejectsMalformedInput) {
  EXPECT_THROW(StructuredDoc::parse("a = 1\na = 2\n"), DataError);
  EXPECT_THROW(StructuredDoc::parse("[x]\n[x]\n"), DataError);
  EXPECT_THROW(StructuredDoc::parse("a 1\n"), DataError);
  EXPECT_THROW(StructuredDoc::parse("a = \"open\n"), DataError);
  EXPECT_THROW(StructuredDoc::parse("[bad name]\n"), DataError);
  EXPECT_THROW(StructuredDoc::parse("a = 1\n").get("", "b"), DataError);
  EXPECT_THROW(StructuredDoc::parse("a = \"s\"\n").get("", "a").as_int(), DataError);
}

TEST(StructuredDocTest, ExactDoublesRoundTrip) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 10000; ++i) {
    const double v = i == 0 ? std::numeric_limits<double>::denorm_min() : u(rng) / (1 + i % 7);
    const auto doc = StructuredDoc::parse("v = " + st::exact(v) + "\n");
    ASSERT_EQ(doc.get("", "v").as_double(), v);
  }
  EXPECT_EQ(st::fixed2(12.345), "12.35");
  EXPECT_EQ(st::fixed2(0.0), "0.00");
}

TEST(StructuredDocTest, CodePointKeys) {
  EXPECT_EQ(st::code_point_key(U'a'), "u0061");
  EXPECT_EQ(st::code_point_key(U'ž'), "u017E");
  EXPECT_EQ(st::parse_code_point_key("u1F600"), std::optional<char32_t>(0x1F600));
  EXPECT_FALSE(st::parse_code_point_key("x0061").has_value());
}

TEST(ParallelMapTest, KeepsInputOrderAndPropagatesErrors) {
  const auto squares = parallel_map(1000, [](std::size_t i) { return i * i; }, 8);
  ASSERT_EQ(squares.size(), 1000u);
  for (std::size_t i = 0; i < squares.size(); ++i) ASSERT_EQ(squares[i], i * i);
  EXPECT_TRUE(parallel_map(0, [](std::size_t i) { return i; }, 4).empty());
  EXPECT_THROW(parallel_map(
                   100,
                   [](std::size_t i) -> int {
                     if (i == 57) throw DataError("boom");
                     return 0;
                   },
                   4),
               DataError);
}

}  // namespace
}  // namespace diacritica
