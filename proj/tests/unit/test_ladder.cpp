// Copyright 2026 The bdicke Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <algorithm>
#include <vector>

#include "bdicke/error.hpp"
#include "bdicke/ladder.hpp"

using namespace bdicke;

TEST(Ladder, SingleProgression) {
  std::vector<double> g;
  for (int i = 1; i <= 10; ++i) g.push_back(0.87 * i);
  const auto f = decompose_ladders(g);
  ASSERT_EQ(f.ladders.size(), 1u);
  EXPECT_NEAR(f.ladders[0].spacing, 0.87, 1e-14);
  EXPECT_NEAR(f.ladders[0].spread, 0.0, 1e-12);
  EXPECT_EQ(f.ladders[0].members.size(), 11u);
  EXPECT_EQ(f.unassigned, 0);
}

TEST(Ladder, TwoInterleaved) {
  std::vector<double> g;
  for (int i = 1; i < 15; ++i) g.push_back(1.0 * i);
  for (int i = 0; i < 12; ++i) g.push_back(4.37 + 1.2 * i);
  std::sort(g.begin(), g.end());
  const auto f = decompose_ladders(g, 0.1);
  ASSERT_EQ(f.ladders.size(), 2u);
  EXPECT_NEAR(f.ladders[0].spacing, 1.0, 1e-12);
  EXPECT_NEAR(f.ladders[1].spacing, 1.2, 1e-12);
  EXPECT_NEAR(f.offset, 4.37, 1e-12);
  EXPECT_EQ(f.unassigned, 0);
}

TEST(Ladder, WeakAnharmonicityTracked) {
  std::vector<double> g;
  for (int i = 1; i <= 30; ++i) g.push_back(i - 0.002 * i * i);
  const auto f = decompose_ladders(g);
  ASSERT_EQ(f.ladders.size(), 1u);
  EXPECT_GT(f.ladders[0].spread, 0.1);
}

TEST(Ladder, Validation) {
  EXPECT_THROW(decompose_ladders(std::vector<double>{1.0}), InvalidArgument);
  EXPECT_THROW(decompose_ladders(std::vector<double>{2.0, 1.0}), InvalidArgument);
  EXPECT_THROW(decompose_ladders(std::vector<double>{1.0, 2.0}, 0.7), InvalidArgument);
}
