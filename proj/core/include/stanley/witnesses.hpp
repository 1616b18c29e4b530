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
#ifndef STANLEY_WITNESSES_HPP_
#define STANLEY_WITNESSES_HPP_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "stanley/hvector.hpp"
#include "stanley/matroid.hpp"
#include "stanley/multicomplex.hpp"

namespace stanley {

// A pure order ideal whose O-sequence is claimed to equal a target h-vector,
// together with the three checks that make the claim a proof. Trailing zeros
// of the target (coloops) are ignored when comparing.
struct WitnessCertificate {
  GeneratorSet generators;
  HVector target;
  OSequence sequence;
  bool is_order_ideal = false;
  bool is_pure = false;
  bool matches_target = false;
  std::string method;

  bool valid() const { return is_order_ideal && is_pure && matches_target; }
};

// Certifies an explicit family of monomials: the family itself must be
// divisor-closed, its maximal members must share one degree, and its
// degreewise counts must equal the target.
WitnessCertificate CertifyMembers(std::vector<Monomial> members,
                                  const HVector& target, std::string method);

// Certifies the ideal generated by a generator set. The O-sequence is taken
// from OSequenceOf and cross-checked against the explicit closure.
WitnessCertificate CertifyGenerators(const GeneratorSet& generators,
                                     const HVector& target, std::string method);

// Variable layout shared by the rank-2 and rank-3 constructions: 'free_count'
// unattached variables come first, then one variable per non-representative
// element, ordered by class and then by element.
struct VariableLayout {
  int free_count = 0;
  // extra[i] lists the variable indices standing for class i's elements
  // other than its representative; extra[i].size() == sizes[i] - 1.
  std::vector<std::vector<int>> extra;

  int arity() const;
  static VariableLayout Make(std::span<const int> sizes, int free_count);
};

// h-vector of the loopless rank-2 matroid with the given class sizes, from
// the closed forms for h_1 and h_2.
HVector RankTwoHVector(std::span<const int> sizes);

// Pure order ideal with O-sequence (1, h_1, h_2) for class sizes s_1..s_t,
// t >= 2. Throws kInvalidParameters on bad sizes.
WitnessCertificate RankTwoWitness(std::span<const int> sizes);

// Order on E(M) listing the classes one after another (classes by smallest
// element, elements ascending inside a class).
GroundOrdering ClassSortedOrdering(const ParallelismDecomposition& classes);

// The monomial attached to a basis {v_i, v_j} of a rank-2 matroid: a1 counts
// later elements up to the end of the class before v_j's class, a2 counts
// elements after v_j.
struct CorankTwoAssignment {
  ElementSet basis;
  int a1 = 0;
  int a2 = 0;
  Monomial monomial;
};

// One assignment per basis of a loopless rank-2 matroid, in basis order.
// Throws kNotRankTwo or kHasLoops.
std::vector<CorankTwoAssignment> CorankTwoAssignments(const Matroid& m);

// Certificate for h(m*) where m is loopless of rank 2.
WitnessCertificate CorankTwoWitness(const Matroid& m);
// Certificate for h(n) where n has corank 2 and no coloops.
WitnessCertificate CorankTwoWitnessOfDual(const Matroid& n);

// Closed forms for (1, h_1, h_2, h_3) of the upper and lower ideals.
HVector RankThreeUpperH(std::span<const int> sizes, int rank);
HVector RankThreeLowerH(std::span<const int> sizes, int rank);

// Upper ideal: O_1 = {x_1..x_{t-d}} and one variable per non-representative
// element, O_2 and O_3 built from cross-class products. Throws
// kInvalidParameters when t < d.
OrderIdeal RankThreeUpper(std::span<const int> sizes, int rank);

// Lower ideal sharing O_1 and O_2 with the upper one and a smaller degree-3
// part. Needs t > d (x_1 must exist) and a positive closed-form h_3; throws
// kInvalidParameters otherwise.
OrderIdeal RankThreeLower(std::span<const int> sizes, int rank);

struct RankThreeWitness {
  WitnessCertificate certificate;
  Integer lower_h3;
  Integer upper_h3;
  // Degree-3 parts: chosen ⊆ upper, and lower ⊆ chosen unless
  // lower_relaxed is set. Empty for coloop inputs.
  std::vector<Monomial> lower_top;
  std::vector<Monomial> chosen_top;
  std::vector<Monomial> upper_top;
  // Set when plain lexicographic filling was impure and a repair pass chose
  // the degree-3 monomials instead.
  bool repaired = false;
  // Set when no pure choice contains the lower part, so the degree-3 layer
  // was picked from the upper part alone.
  bool lower_relaxed = false;
};

// Throws kNotRankThree, kHasLoops, or kSandwichViolated (which would
// contradict the known h_3 bounds and signals a bug).
RankThreeWitness RankThreeWitnessOf(const Matroid& m);

// Certificate for a loopless matroid without coloops of rank <= 1 or corank
// <= 1, where the ideal is forced.
WitnessCertificate TrivialWitness(const Matroid& m);

// Removes loops and coloops, then applies the first construction that
// covers the result: trivial (rank or corank <= 1), rank 2, corank 2, rank 3.
// Returns nullopt when none applies. The target is the full h(m).
std::optional<WitnessCertificate> ConstructWitness(const Matroid& m);

}  // namespace stanley

#endif  // STANLEY_WITNESSES_HPP_
