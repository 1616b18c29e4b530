// Copyright 2026 The Authors.
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
#include "stanley/element_set.hpp"

#include <gtest/gtest.h>

namespace stanley {
namespace {

TEST(ElementSetTest, BuildsFromElements) {
  const ElementSet s = ElementSet::Of({3, 0, 2});
  EXPECT_EQ(s.bits(), 0b1101u);
  EXPECT_EQ(s.size(), 3);
  EXPECT_TRUE(s.contains(2));
  EXPECT_FALSE(s.contains(1));
  EXPECT_EQ(s.elements(), (std::vector<int>{0, 2, 3}));
}

TEST(ElementSetTest, SetAlgebra) {
  const ElementSet a = ElementSet::Of({0, 1, 2});
  const ElementSet b = ElementSet::Of({1, 3});
  EXPECT_EQ(a & b, ElementSet::Of({1}));
  EXPECT_EQ(a | b, ElementSet::Of({0, 1, 2, 3}));
  EXPECT_EQ(a - b, ElementSet::Of({0, 2}));
  EXPECT_TRUE(ElementSet::Of({1}).IsSubsetOf(b));
  EXPECT_FALSE(a.IsSubsetOf(b));
  EXPECT_EQ(a.With(5).Without(0), ElementSet::Of({1, 2, 5}));
}

TEST(ElementSetTest, FullAndEmpty) {
  EXPECT_TRUE(ElementSet::Full(0).empty());
  EXPECT_EQ(ElementSet::Full(4).size(), 4);
  EXPECT_EQ(ElementSet::Full(32).size(), 32);
  EXPECT_EQ(ElementSet().ToString(), "-");
  EXPECT_EQ(ElementSet::Of({0, 2}).ToString(), "0,2");
}

TEST(ElementSetTest, RejectsOutOfRangeElements) {
  EXPECT_ANY_THROW(ElementSet::Of({32}));
  EXPECT_ANY_THROW(ElementSet::Of({-1}));
}

}  // namespace
}  // namespace stanley
