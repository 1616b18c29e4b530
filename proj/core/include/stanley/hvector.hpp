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
#ifndef STANLEY_HVECTOR_HPP_
#define STANLEY_HVECTOR_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "stanley/matroid.hpp"

namespace stanley {

using Integer = boost::multiprecision::cpp_int;

// entries[i] counts the independent sets of cardinality i, so entries[0] = 1.
struct FVector {
  std::vector<Integer> entries;

  friend bool operator==(const FVector&, const FVector&) = default;
};

struct HVector {
  std::vector<Integer> entries;

  int degree() const { return static_cast<int>(entries.size()) - 1; }
  // Largest index with a nonzero entry (0 when all of h_1.. vanish).
  int EffectiveDegree() const;
  // Copy with trailing zeros removed (entries[0] is always kept).
  HVector Trimmed() const;
  // "(1 5 15 27 22)"
  std::string ToString() const;
  // Accepts "1,5,15", "1 5 15" or "(1 5 15)". Throws kParseError.
  static HVector Parse(std::string_view text);

  friend bool operator==(const HVector&, const HVector&) = default;
  friend auto operator<=>(const HVector& a, const HVector& b) {
    return a.entries <=> b.entries;
  }
};

Integer Binomial(const Integer& n, int k);
// Number of degree-'degree' monomials in 'variables' variables.
Integer MonomialCount(const Integer& variables, int degree);

FVector FVectorOf(const Matroid& m);

// Exact binomial transform of sum h_j x^j = sum f_i x^i (1-x)^(d-i).
// Throws kInvalidArgument unless f has rank+1 entries.
HVector HFromF(const FVector& f, int rank);
FVector FFromH(const HVector& h);

HVector HVectorOf(const Matroid& m);

// Elements v of the basis for which some smaller u outside it gives the
// basis B - v + u.
int InternallyPassiveCount(const Matroid& m, ElementSet basis,
                           const GroundOrdering& order);
// Elements v outside the basis for which some smaller u in it gives the
// basis B - u + v.
int ExternallyPassiveCount(const Matroid& m, ElementSet basis,
                           const GroundOrdering& order);

// h_j = #{bases B of m : ip(B) = j}.
HVector HViaInternalPassivity(const Matroid& m, const GroundOrdering& order);
// h_j = #{bases B* of the dual : ep(B*) = j}, computed in the dual matroid.
HVector HViaExternalPassivity(const Matroid& m, const GroundOrdering& order);

// (-1)^s sum_{i=0}^{s} (-alpha)^i h_i, which is nonnegative for matroid
// h-vectors whenever alpha >= 1. At alpha = 1 this is the alternating sum
// h_s - h_{s-1} + ... +- h_0.
Integer BrownColbourn(const HVector& h, int s, const Integer& alpha);

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct BrownColbournFailure {
  int s = 0;
  Integer alpha;
  Integer value;
};

// Necessary conditions shared by matroid h-vectors and pure O-sequences,
// evaluated up to the effective degree d:
//   h_0 = 1 and every entry nonnegative,
//   h_0 <= h_1 <= ... <= h_{floor(d/2)},
//   h_i <= h_{d-i} for i <= floor(d/2),
//   Brown-Colbourn for 0 <= s <= d and integer alpha in [1, alpha_max],
//   h_i <= C(h_1 + i - 1, i).
// alpha_max defaults to max(5, max_i h_i).
struct StructuralReport {
  int effective_degree = 0;
  std::vector<CheckResult> checks;
  std::optional<BrownColbournFailure> brown_colbourn_failure;

  bool passed() const;
  // Name and detail of the first failing check, or "ok".
  std::string Summary() const;
};

StructuralReport StructuralChecks(const HVector& h,
                                  std::optional<Integer> alpha_max = {});

}  // namespace stanley

#endif  // STANLEY_HVECTOR_HPP_
