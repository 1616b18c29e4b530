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
#include "stanley/enumerate.hpp"

#include <cstdint>
#include <string>

#include "stanley/errors.hpp"

namespace stanley {
namespace {

enum class Decision : std::uint8_t { kUnknown, kIn, kOut };

// Depth-first search over basis families of r-subsets. Every exchange
// constraint (B, B', e) is tested as soon as the last set it mentions has
// been decided, so every leaf reached is a valid basis family.
class BasisFamilySearch {
 public:
  BasisFamilySearch(int n, int r, const std::function<void(const Matroid&)>& visit)
      : n_(n), visit_(visit), position_(std::size_t{1} << n, -1) {
    for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << n); ++bits) {
      const ElementSet s(bits);
      if (s.size() != r) continue;
      position_[bits] = static_cast<int>(subsets_.size());
      subsets_.push_back(s);
    }
    decision_.assign(subsets_.size(), Decision::kUnknown);
    last_position_.assign(n, -1);
    for (int p = 0; p < static_cast<int>(subsets_.size()); ++p) {
      for (int e : subsets_[p].elements()) last_position_[e] = p;
    }
    element_covered_.assign(n, 0);
  }

  void Run() { Descend(0); }

 private:
  bool Included(ElementSet s) const {
    return decision_[position_[s.bits()]] == Decision::kIn;
  }

  // True when the constraint (b, other, e) can no longer be satisfied.
  bool Violated(ElementSet b, ElementSet other, int e) const {
    const ElementSet reduced = b.Without(e);
    for (int f : (other - b).elements()) {
      if (decision_[position_[reduced.With(f).bits()]] != Decision::kOut) {
        return false;
      }
    }
    return true;
  }

  bool ConsistentAfterInclude(int p) const {
    const ElementSet x = subsets_[p];
    for (int q = 0; q <= p; ++q) {
      if (decision_[q] != Decision::kIn) continue;
      const ElementSet other = subsets_[q];
      for (int e : (x - other).elements()) {
        if (Violated(x, other, e)) return false;
      }
      for (int e : (other - x).elements()) {
        if (Violated(other, x, e)) return false;
      }
    }
    return true;
  }

  bool ConsistentAfterExclude(int p) const {
    // x = b - e + f for b = x - f + e; recheck each pair (b, other) with
    // f in other and e not in other.
    const ElementSet x = subsets_[p];
    const ElementSet outside = ElementSet::Full(n_) - x;
    for (int f : x.elements()) {
      for (int e : outside.elements()) {
        const ElementSet b = x.Without(f).With(e);
        if (!Included(b)) continue;
        for (int q = 0; q < static_cast<int>(subsets_.size()); ++q) {
          if (decision_[q] != Decision::kIn) continue;
          const ElementSet other = subsets_[q];
          if (!other.contains(f) || other.contains(e)) continue;
          if (Violated(b, other, e)) return false;
        }
      }
    }
    return true;
  }

  // Loopless: each element must still be able to appear in some basis.
  bool CoverageStillPossible(int p) const {
    for (int e = 0; e < n_; ++e) {
      if (last_position_[e] <= p && element_covered_[e] == 0) return false;
    }
    return true;
  }

  void Descend(int p) {
    if (p == static_cast<int>(subsets_.size())) {
      std::vector<ElementSet> bases;
      for (int q = 0; q < p; ++q) {
        if (decision_[q] == Decision::kIn) bases.push_back(subsets_[q]);
      }
      if (bases.empty()) return;
      visit_(Matroid::FromBases(n_, std::move(bases)));
      return;
    }
    const ElementSet x = subsets_[p];

    decision_[p] = Decision::kIn;
    for (int e : x.elements()) ++element_covered_[e];
    if (ConsistentAfterInclude(p) && CoverageStillPossible(p)) Descend(p + 1);
    for (int e : x.elements()) --element_covered_[e];

    decision_[p] = Decision::kOut;
    if (ConsistentAfterExclude(p) && CoverageStillPossible(p)) Descend(p + 1);

    decision_[p] = Decision::kUnknown;
  }

  int n_;
  const std::function<void(const Matroid&)>& visit_;
  std::vector<ElementSet> subsets_;
  std::vector<int> position_;
  std::vector<Decision> decision_;
  std::vector<int> last_position_;
  std::vector<int> element_covered_;
};

}  // namespace

void ForEachMatroid(int n, std::optional<int> rank,
                    const std::function<void(const Matroid&)>& visit, int cap) {
  if (cap > kHardEnumerationCap) {
    throw Error(ErrorCode::kCapExceeded,
                "enumeration cap cannot exceed " +
                    std::to_string(kHardEnumerationCap));
  }
  if (n < 0 || n > cap) {
    throw Error(ErrorCode::kCapExceeded,
                "n=" + std::to_string(n) + " exceeds enumeration cap " +
                    std::to_string(cap));
  }
  const int low = rank ? *rank : 0;
  const int high = rank ? *rank : n;
  for (int r = low; r <= high; ++r) {
    if (r < 0 || r > n) continue;
    if (r == 0) {
      // Only the empty ground set has a loopless rank-0 matroid.
      if (n == 0) visit(Matroid::FromBases(0, {ElementSet()}));
      continue;
    }
    BasisFamilySearch(n, r, visit).Run();
  }
}

std::vector<Matroid> EnumerateMatroids(int n, std::optional<int> rank, int cap) {
  std::vector<Matroid> out;
  ForEachMatroid(n, rank, [&](const Matroid& m) { out.push_back(m); }, cap);
  return out;
}

}  // namespace stanley
