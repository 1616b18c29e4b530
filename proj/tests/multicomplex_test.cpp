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
#include "stanley/multicomplex.hpp"

#include <gtest/gtest.h>

#include <random>

#include "stanley/errors.hpp"

namespace stanley {
namespace {

// Every exponent vector with total degree <= top, by odometer.
std::vector<std::vector<int>> AllExponents(int arity, int top) {
  std::vector<std::vector<int>> out;
  std::vector<int> e(arity, 0);
  while (true) {
    int sum = 0;
    for (int x : e) sum += x;
    if (sum <= top) out.push_back(e);
    int i = 0;
    while (i < arity && ++e[i] > top) e[i++] = 0;
    if (i == arity) break;
  }
  if (arity == 0) out = {{}};
  return out;
}

bool DividesRaw(const std::vector<int>& a, const std::vector<int>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

struct Oracle {
  std::vector<std::uint64_t> counts;
  bool pure = true;
};

Oracle BruteForce(const std::vector<std::vector<int>>& gens, int arity) {
  int top = 0;
  for (const auto& g : gens) {
    int d = 0;
    for (int x : g) d += x;
    top = std::max(top, d);
  }
  Oracle out;
  out.counts.assign(top + 1, 0);
  std::vector<std::vector<int>> members;
  for (const auto& e : AllExponents(arity, top)) {
    for (const auto& g : gens) {
      if (DividesRaw(e, g)) {
        int d = 0;
        for (int x : e) d += x;
        ++out.counts[d];
        members.push_back(e);
        break;
      }
    }
  }
  // Pure iff every maximal member sits in the top degree.
  for (const auto& a : members) {
    int d = 0;
    for (int x : a) d += x;
    if (d == top) continue;
    bool maximal = true;
    for (const auto& b : members) {
      if (a != b && DividesRaw(a, b)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.pure = false;
  }
  return out;
}

TEST(MulticomplexTest, PublishedExample) {
  const GeneratorSet g = GeneratorSet::Parse("[[0,0,0,5],[0,0,2,3],[1,3,0,1]]");
  EXPECT_EQ(OSequenceOf(g).ToString(), "(1 4 7 7 6 3)");
  EXPECT_TRUE(IsPure(g));
}

TEST(MulticomplexTest, SmallExamples) {
  EXPECT_EQ(OSequenceOf(GeneratorSet::Parse("[[2]]")).ToString(), "(1 1 1)");
  EXPECT_TRUE(IsPure(GeneratorSet::Parse("[[2]]")));
  const GeneratorSet mixed = GeneratorSet::Parse("[[3,0],[0,1]]");
  EXPECT_EQ(OSequenceOf(mixed).ToString(), "(1 2 1 1)");
  EXPECT_FALSE(IsPure(mixed));
  EXPECT_EQ(OSequenceOf(GeneratorSet::Parse("[[]]")).ToString(), "(1)");
}

TEST(MulticomplexTest, ParseNormalisesToAntichain) {
  const GeneratorSet g = GeneratorSet::Parse(" [ [1,1], [0,1], [1,1] ] ");
  EXPECT_EQ(g.ToString(), "[[1,1]]");
  EXPECT_EQ(g.arity(), 2);
  EXPECT_EQ(g.TopDegree(), 2);
  EXPECT_THROW(GeneratorSet::Parse("[[1,2],[1]]"), Error);
  EXPECT_THROW(GeneratorSet::Parse("[[1,-2]]"), Error);
  EXPECT_THROW(GeneratorSet::Parse("[[1,2]"), Error);
  EXPECT_THROW(GeneratorSet::Parse("[]"), Error);
}

TEST(MulticomplexTest, RandomGeneratorsMatchBruteForce) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int arity = 1 + static_cast<int>(rng() % 4);
    const int count = 1 + static_cast<int>(rng() % 4);
    std::vector<std::vector<int>> raw;
    std::vector<Monomial> monomials;
    for (int g = 0; g < count; ++g) {
      std::vector<int> e(arity);
      for (int& x : e) x = static_cast<int>(rng() % 4);
      raw.push_back(e);
      monomials.emplace_back(e);
    }
    const GeneratorSet gens = GeneratorSet::FromMonomials(monomials);
    const Oracle expected = BruteForce(raw, arity);
    ASSERT_EQ(OSequenceOf(gens).entries, expected.counts) << gens.ToString();
    ASSERT_EQ(Closure(gens).Counts().entries, expected.counts) << gens.ToString();
    ASSERT_EQ(IsPure(gens), expected.pure) << gens.ToString();
  }
}

TEST(MulticomplexTest, ClosureIsAnOrderIdeal) {
  const OrderIdeal ideal = Closure(GeneratorSet::Parse("[[2,1,0],[0,1,2]]"));
  EXPECT_TRUE(IsOrderIdeal(ideal.members()));
  EXPECT_TRUE(ideal.IsPure());
  EXPECT_TRUE(ideal.contains(Monomial({1, 1, 0})));
  EXPECT_FALSE(ideal.contains(Monomial({1, 0, 1})));
  EXPECT_EQ(ideal.Generators().ToString(), "[[0,1,2],[2,1,0]]");
}

TEST(MulticomplexTest, OrderIdealValidation) {
  const std::vector<Monomial> gap = {Monomial({0, 0}), Monomial({2, 0})};
  EXPECT_FALSE(IsOrderIdeal(gap));
  EXPECT_THROW(OrderIdeal::FromMembers(2, gap), Error);
  const std::vector<Monomial> ok = {Monomial({0, 0}), Monomial({1, 0}), Monomial({2, 0})};
  EXPECT_TRUE(IsOrderIdeal(ok));
  EXPECT_EQ(OrderIdeal::FromMembers(2, ok).size(), 3u);
}

TEST(MulticomplexTest, MaximalMembers) {
  const std::vector<Monomial> members = {Monomial({0, 0}), Monomial({1, 0}),
                                         Monomial({0, 1}), Monomial({1, 1})};
  EXPECT_EQ(MaximalMembers(members), std::vector<Monomial>{Monomial({1, 1})});
}

TEST(MulticomplexTest, MonomialsOfDegreeAreLexOrdered) {
  const auto all = MonomialsOfDegree(3, 2);
  ASSERT_EQ(all.size(), 6u);
  EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
  for (const Monomial& m : all) EXPECT_EQ(m.degree(), 2);
}

TEST(MulticomplexTest, MonomialBasics) {
  const Monomial m({1, 0, 2});
  EXPECT_EQ(m.degree(), 3);
  EXPECT_EQ(m.ToString(), "[1,0,2]");
  EXPECT_TRUE(Monomial({1, 0, 1}).Divides(m));
  EXPECT_FALSE(Monomial({0, 1, 0}).Divides(m));
  EXPECT_EQ(m.Times(1, 2), Monomial({1, 2, 2}));
}

TEST(MulticomplexTest, WideArityFallsBackToClosure) {
  // 20 variables with large exponents overflows the packed key.
  std::vector<int> e(20, 0);
  e[0] = 40;
  e[19] = 1;
  const GeneratorSet g = GeneratorSet::FromMonomials({Monomial(e)});
  const OSequence seq = OSequenceOf(g);
  ASSERT_EQ(seq.entries.size(), 42u);
  EXPECT_EQ(seq.entries[1], 2u);
  EXPECT_EQ(seq.entries[41], 1u);
}

}  // namespace
}  // namespace stanley
