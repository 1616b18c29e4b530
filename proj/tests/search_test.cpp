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
#include "stanley/search.hpp"

#include <gtest/gtest.h>

#include <set>

#include "stanley/errors.hpp"

namespace stanley {
namespace {

TEST(SearchTest, UnrankEnumeratesTheSimplex) {
  const auto points = MonomialsOfDegree(3, 4);
  for (std::uint64_t r = 0; r < points.size(); ++r) {
    EXPECT_EQ(UnrankMonomial(3, 4, r), points[r]);
  }
}

TEST(SearchTest, SamplesAreDistinctAndOnTheSimplex) {
  SearchRng rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const GeneratorSet g = SampleGenerators(4, 3, 7, rng);
    ASSERT_EQ(g.monomials().size(), 7u);
    for (const Monomial& m : g.monomials()) {
      ASSERT_EQ(m.degree(), 3);
      ASSERT_EQ(m.arity(), 4);
    }
  }
  // Every 2-subset of the 3 degree-2 monomials in 2 variables shows up.
  std::set<std::string> seen;
  for (int trial = 0; trial < 200; ++trial) {
    seen.insert(SampleGenerators(2, 2, 2, rng).ToString());
  }
  EXPECT_EQ(seen.size(), 3u);
}

TEST(SearchTest, SamplingRejectsImpossibleCounts) {
  SearchRng rng(1);
  try {
    SampleGenerators(2, 2, 4, rng);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTooMany);
  }
  EXPECT_THROW(SampleGenerators(0, 2, 1, rng), Error);
}

TEST(SearchTest, MutationKeepsShape) {
  SearchRng rng(11);
  GeneratorSet g = SampleGenerators(4, 3, 6, rng);
  for (int step = 0; step < 500; ++step) {
    const GeneratorSet next = Mutate(g, rng);
    ASSERT_EQ(next.monomials().size(), 6u);
    int changed = 0;
    std::set<Monomial> before(g.monomials().begin(), g.monomials().end());
    for (const Monomial& m : next.monomials()) {
      ASSERT_EQ(m.degree(), 3);
      if (!before.count(m)) ++changed;
    }
    ASSERT_LE(changed, 1);
    g = next;
  }
}

TEST(SearchTest, FindsPublishedTargets) {
  for (const char* text : {"1,5,15,27,22", "1,5,15,27,35"}) {
    const SearchOutcome out = Anneal(HVector::Parse(text), SearchParams{});
    ASSERT_TRUE(out.found()) << text << ": " << out.reason;
    EXPECT_TRUE(out.certificate->valid());
    EXPECT_EQ(out.best_distance, 0u);
  }
}

TEST(SearchTest, DeterministicPerSeed) {
  SearchParams params;
  params.seed = 42;
  const HVector target = HVector::Parse("1,4,10,13");
  const SearchOutcome a = Anneal(target, params);
  const SearchOutcome b = Anneal(target, params);
  ASSERT_TRUE(a.found());
  EXPECT_EQ(a.certificate->generators, b.certificate->generators);
  EXPECT_EQ(a.evaluations, b.evaluations);
  EXPECT_EQ(a.certificate->method, "search:seed=42");
}

TEST(SearchTest, PreFilterRejectsWithoutEvaluating) {
  const SearchOutcome out = Anneal(HVector::Parse("1,1,2"), SearchParams{});
  EXPECT_FALSE(out.found());
  EXPECT_EQ(out.evaluations, 0u);
  EXPECT_NE(out.reason.find("counting-bound"), std::string::npos) << out.reason;
  EXPECT_FALSE(Anneal(HVector::Parse("1,5,2"), SearchParams{}).found());
}

TEST(SearchTest, TrivialTarget) {
  const SearchOutcome out = Anneal(HVector::Parse("1"), SearchParams{});
  ASSERT_TRUE(out.found());
  EXPECT_EQ(out.certificate->generators.ToString(), "[[]]");
  EXPECT_TRUE(Anneal(HVector::Parse("1,0,0"), SearchParams{}).found());
}

TEST(SearchTest, ExhaustsBudgetOnInfeasibleTarget) {
  // (1,2,2,3) passes the structural checks but is not a pure O-sequence:
  // three cubics in two variables have at least three quadratic divisors.
  const HVector target = HVector::Parse("1,2,2,3");
  ASSERT_FALSE(ExhaustiveSearch(target).found());
  SearchParams params;
  params.budget = 2000;
  const SearchOutcome out = Anneal(target, params);
  EXPECT_FALSE(out.found());
  EXPECT_EQ(out.evaluations, 2000u);
  ASSERT_TRUE(out.best_distance);
  EXPECT_GT(*out.best_distance, 0u);
}

TEST(SearchTest, ExhaustiveFindsSmallWitnesses) {
  const SearchOutcome out = ExhaustiveSearch(HVector::Parse("1,2,3"));
  ASSERT_TRUE(out.found());
  EXPECT_EQ(out.certificate->generators.ToString(), "[[0,2],[1,1],[2,0]]");
  EXPECT_EQ(out.certificate->method, "exhaustive");
}

TEST(SearchTest, ExhaustiveCap) {
  try {
    ExhaustiveSearch(HVector::Parse("1,5,15,27,22"), 1000);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCapExceeded);
  }
}

TEST(SearchTest, ParamsValidate) {
  SearchParams p;
  EXPECT_NO_THROW(p.Validate());
  p.decay = 1.0;
  EXPECT_THROW(p.Validate(), Error);
  p = SearchParams{};
  p.budget = 0;
  EXPECT_THROW(p.Validate(), Error);
  p = SearchParams{};
  p.restarts = 0;
  EXPECT_THROW(p.Validate(), Error);
}

}  // namespace
}  // namespace stanley
