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
#ifndef STANLEY_MATROID_HPP_
#define STANLEY_MATROID_HPP_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "stanley/element_set.hpp"

namespace stanley {

// A matroid on {0, ..., n-1} given by its family of bases.
//
// The bases are kept sorted and duplicate-free, so two Matroid values compare
// equal exactly when they have the same ground set and the same bases.
// Independence is derived (subset of some basis) and never stored. Values are
// immutable once constructed.
class Matroid {
 public:
  // Validates equal cardinality and the basis-exchange axiom. Throws Error
  // with kMixedCardinality or kExchangeViolation on bad input.
  static Matroid FromBases(int n, std::vector<ElementSet> bases);

  int size() const { return n_; }
  int rank() const { return rank_; }
  int corank() const { return n_ - rank_; }
  ElementSet ground_set() const { return ElementSet::Full(n_); }
  std::span<const ElementSet> bases() const { return bases_; }

  bool IsBasis(ElementSet s) const;
  bool IsIndependent(ElementSet s) const;

  friend bool operator==(const Matroid& a, const Matroid& b) {
    return a.n_ == b.n_ && a.bases_ == b.bases_;
  }

 private:
  Matroid(int n, int rank, std::vector<ElementSet> bases);

  int n_ = 0;
  int rank_ = 0;
  std::vector<ElementSet> bases_;
  // Dense membership table indexed by bitmask; empty for large n.
  std::vector<bool> basis_table_;
};

struct NamedMatroid {
  std::string name;
  Matroid matroid;
};

// A witness that a family of equal-size sets is not a basis family: removing
// 'element' from 'first' cannot be repaired by any element of second \ first.
struct ExchangeViolation {
  ElementSet first;
  ElementSet second;
  int element = -1;
};

// Checks the exchange axiom on a sorted, duplicate-free family.
std::optional<ExchangeViolation> FindExchangeViolation(
    std::span<const ElementSet> bases);

// Parallelism classes of a loopless matroid, ordered by smallest element.
struct ParallelismDecomposition {
  std::vector<ElementSet> classes;

  int count() const { return static_cast<int>(classes.size()); }
  std::vector<int> sizes() const;
  // Index of the class containing e, or -1.
  int ClassOf(int e) const;
};

// A total order v_1 < ... < v_n on the ground set.
class GroundOrdering {
 public:
  static GroundOrdering Natural(int n);
  // order[k] is the element in position k. Throws kInvalidArgument unless
  // order is a permutation of {0, ..., n-1}.
  static GroundOrdering FromSequence(std::vector<int> order);

  int size() const { return static_cast<int>(order_.size()); }
  int at(int position) const { return order_[position]; }
  int position(int element) const { return position_[element]; }
  bool Less(int a, int b) const { return position_[a] < position_[b]; }
  const std::vector<int>& sequence() const { return order_; }

 private:
  std::vector<int> order_;
  std::vector<int> position_;
};

// All independent sets, grouped by cardinality 0..rank.
std::vector<std::vector<ElementSet>> IndependentSets(const Matroid& m);

int RankOf(const Matroid& m, ElementSet s);

Matroid Dual(const Matroid& m);

ElementSet Loops(const Matroid& m);
ElementSet Coloops(const Matroid& m);

// Throws kHasLoops if m has a loop.
ParallelismDecomposition ParallelismClasses(const Matroid& m);

// Restriction to s, with the elements of s relabelled 0..|s|-1 in
// increasing order.
Matroid Restrict(const Matroid& m, ElementSet s);

// One representative (the smallest element) per parallelism class. Throws
// kHasLoops.
Matroid Simplify(const Matroid& m);

// Removes every coloop from the ground set and from each basis.
Matroid ContractColoops(const Matroid& m);

// Restriction to the non-loop elements.
Matroid DeleteLoops(const Matroid& m);

}  // namespace stanley

#endif  // STANLEY_MATROID_HPP_
