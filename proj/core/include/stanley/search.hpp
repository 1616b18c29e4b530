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
#ifndef STANLEY_SEARCH_HPP_
#define STANLEY_SEARCH_HPP_

#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "stanley/hvector.hpp"
#include "stanley/multicomplex.hpp"
#include "stanley/witnesses.hpp"

namespace stanley {

struct SearchParams {
  std::uint64_t seed = 1;
  // Total candidate evaluations, split evenly across restarts.
  std::uint64_t budget = 200000;
  double initial_temperature = 2.0;
  // Geometric cooling factor applied every steps_per_level proposals.
  double decay = 0.95;
  int steps_per_level = 50;
  int restarts = 8;

  // Throws kInvalidArgument unless budget >= 1, 0 < decay < 1,
  // steps_per_level >= 1, restarts >= 1 and initial_temperature > 0.
  void Validate() const;
};

enum class SearchStatus { kFound, kExhausted };

struct SearchOutcome {
  SearchStatus status = SearchStatus::kExhausted;
  std::optional<WitnessCertificate> certificate;
  std::uint64_t evaluations = 0;
  // Smallest L1 distance reached; empty if no candidate was evaluated.
  std::optional<std::uint64_t> best_distance;
  std::string reason;

  bool found() const { return status == SearchStatus::kFound; }
};

using SearchRng = std::mt19937_64;

// m distinct degree-d monomials in k variables, uniform over m-subsets of the
// lattice points of the simplex. Throws kTooMany when m exceeds the number of
// lattice points and kInvalidArgument on k < 1, d < 1 or m < 1.
GeneratorSet SampleGenerators(int k, int d, std::uint64_t m, SearchRng& rng);

// The monomial of the given rank in MonomialsOfDegree(k, d) order.
Monomial UnrankMonomial(int k, int d, std::uint64_t rank);

// Replaces one generator g by g - e_i + e_j, choosing (generator, i, j)
// uniformly among moves with g_i >= 1 and i != j. A move that collides with
// another generator is redrawn up to 16 times, after which g is returned
// unchanged.
GeneratorSet Mutate(const GeneratorSet& generators, SearchRng& rng);

// Simulated annealing over sets of h_d degree-d generators in h_1 variables,
// minimising the L1 distance between their O-sequence and the target
// (trailing zeros dropped). Targets failing StructuralChecks are rejected
// before any evaluation. Deterministic for a given seed.
SearchOutcome Anneal(const HVector& target, const SearchParams& params);

inline constexpr std::uint64_t kDefaultExhaustiveCap = 10000000;

// Tries every m-subset of the degree-d lattice points in lexicographic order
// and returns the first witness. Exhausted means no pure order ideal with
// this O-sequence exists. Throws kCapExceeded when the number of subsets
// exceeds cap.
SearchOutcome ExhaustiveSearch(const HVector& target,
                               std::uint64_t cap = kDefaultExhaustiveCap);

}  // namespace stanley

#endif  // STANLEY_SEARCH_HPP_
