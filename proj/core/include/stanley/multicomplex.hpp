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
#ifndef STANLEY_MULTICOMPLEX_HPP_
#define STANLEY_MULTICOMPLEX_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "stanley/hvector.hpp"

namespace stanley {

// A monomial x_1^a_1 ... x_k^a_k as a dense exponent vector. Ordered
// lexicographically by exponent vector.
class Monomial {
 public:
  Monomial() = default;
  // Throws kInvalidArgument on a negative exponent.
  explicit Monomial(std::vector<int> exponents);

  static Monomial One(int arity) { return Monomial(std::vector<int>(arity, 0)); }

  int arity() const { return static_cast<int>(exponents_.size()); }
  int degree() const { return degree_; }
  int operator[](int variable) const { return exponents_[variable]; }
  const std::vector<int>& exponents() const { return exponents_; }

  bool Divides(const Monomial& other) const;
  // this * x_variable^power; power may be negative as long as the exponent
  // stays nonnegative.
  Monomial Times(int variable, int power = 1) const;

  // "[0,0,2,3]"
  std::string ToString() const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.exponents_ == b.exponents_;
  }
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    return a.exponents_ <=> b.exponents_;
  }

 private:
  std::vector<int> exponents_;
  int degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const;
};

// Top-degree generators of an order ideal: nonempty, one arity, normalized
// to a sorted antichain under divisibility.
class GeneratorSet {
 public:
  // Throws kInvalidArgument when empty or of mixed arity.
  static GeneratorSet FromMonomials(std::vector<Monomial> monomials);
  // Parses "[[0,0,0,5],[0,0,2,3],[1,3,0,1]]"; whitespace is ignored.
  // Throws kParseError.
  static GeneratorSet Parse(std::string_view literal);

  int arity() const { return arity_; }
  const std::vector<Monomial>& monomials() const { return monomials_; }
  int TopDegree() const;
  std::string ToString() const;

  friend bool operator==(const GeneratorSet&, const GeneratorSet&) = default;

 private:
  int arity_ = 0;
  std::vector<Monomial> monomials_;
};

// Degreewise cardinalities F_0, F_1, ... of an order ideal.
struct OSequence {
  std::vector<std::uint64_t> entries;

  // "(1 4 7 7 6 3)"
  std::string ToString() const;
  // Equal to h once trailing zeros are dropped from both.
  bool Matches(const HVector& h) const;

  friend bool operator==(const OSequence&, const OSequence&) = default;
};

// A divisor-closed family of monomials, grouped by degree.
class OrderIdeal {
 public:
  // Throws kInvalidArgument unless members are of the given arity and closed
  // under division. Duplicates are merged.
  static OrderIdeal FromMembers(int arity, std::vector<Monomial> members);

  int arity() const { return arity_; }
  // levels()[i] holds the members of degree i, sorted.
  const std::vector<std::vector<Monomial>>& levels() const { return levels_; }
  std::size_t size() const;
  bool contains(const Monomial& m) const;
  std::vector<Monomial> members() const;
  OSequence Counts() const;
  // The divisibility-maximal members.
  GeneratorSet Generators() const;
  bool IsPure() const;

 private:
  int arity_ = 0;
  std::vector<std::vector<Monomial>> levels_;
};

// Every divisor of every generator. Walks each generator's divisor lattice
// and deduplicates globally.
OrderIdeal Closure(const GeneratorSet& generators);

// F(Closure(generators)) computed with per-degree hash sets of packed
// exponent vectors, without building the ideal.
OSequence OSequenceOf(const GeneratorSet& generators);

bool IsPure(const GeneratorSet& generators);

// True iff the (nonempty, single-arity) family is closed under division.
bool IsOrderIdeal(std::span<const Monomial> monomials);

// Divisibility-maximal members of a family.
std::vector<Monomial> MaximalMembers(std::span<const Monomial> monomials);

// All monomials of the given degree in 'arity' variables, sorted ascending.
std::vector<Monomial> MonomialsOfDegree(int arity, int degree);

}  // namespace stanley

#endif  // STANLEY_MULTICOMPLEX_HPP_
