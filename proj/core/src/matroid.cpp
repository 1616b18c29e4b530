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
#include "stanley/matroid.hpp"

#include <algorithm>
#include <numeric>

#include "stanley/errors.hpp"

namespace stanley {
namespace {

constexpr int kDenseTableLimit = 16;

std::string DescribeViolation(const ExchangeViolation& v) {
  return "B={" + v.first.ToString() + "}, B'={" + v.second.ToString() +
         "}, e=" + std::to_string(v.element) +
         ": no f in B'\\B makes B-e+f a basis";
}

}  // namespace

Matroid::Matroid(int n, int rank, std::vector<ElementSet> bases)
    : n_(n), rank_(rank), bases_(std::move(bases)) {
  if (n_ <= kDenseTableLimit) {
    basis_table_.assign(std::size_t{1} << n_, false);
    for (ElementSet b : bases_) basis_table_[b.bits()] = true;
  }
}

Matroid Matroid::FromBases(int n, std::vector<ElementSet> bases) {
  if (n < 0 || n > kMaxGroundSize) {
    throw Error(ErrorCode::kInvalidArgument,
                "ground set size " + std::to_string(n) + " out of range");
  }
  if (bases.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "a matroid needs a basis");
  }
  const ElementSet ground = ElementSet::Full(n);
  for (ElementSet b : bases) {
    if (!b.IsSubsetOf(ground)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "basis {" + b.ToString() + "} is not a subset of 0.." +
                      std::to_string(n - 1));
    }
  }
  std::sort(bases.begin(), bases.end());
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  const int rank = bases.front().size();
  for (ElementSet b : bases) {
    if (b.size() != rank) {
      throw Error(ErrorCode::kMixedCardinality,
                  "bases {" + bases.front().ToString() + "} and {" +
                      b.ToString() + "} differ in size");
    }
  }
  if (auto violation = FindExchangeViolation(bases)) {
    throw Error(ErrorCode::kExchangeViolation, DescribeViolation(*violation));
  }
  return Matroid(n, rank, std::move(bases));
}

bool Matroid::IsBasis(ElementSet s) const {
  if (!basis_table_.empty()) {
    return s.IsSubsetOf(ground_set()) && basis_table_[s.bits()];
  }
  return std::binary_search(bases_.begin(), bases_.end(), s);
}

bool Matroid::IsIndependent(ElementSet s) const {
  return std::any_of(bases_.begin(), bases_.end(),
                     [s](ElementSet b) { return s.IsSubsetOf(b); });
}

std::optional<ExchangeViolation> FindExchangeViolation(
    std::span<const ElementSet> bases) {
  auto is_basis = [&](ElementSet s) {
    return std::binary_search(bases.begin(), bases.end(), s);
  };
  for (ElementSet b : bases) {
    for (ElementSet other : bases) {
      const ElementSet candidates = other - b;
      for (int e : (b - other).elements()) {
        const ElementSet reduced = b.Without(e);
        bool repaired = false;
        for (int f : candidates.elements()) {
          if (is_basis(reduced.With(f))) {
            repaired = true;
            break;
          }
        }
        if (!repaired) return ExchangeViolation{b, other, e};
      }
    }
  }
  return std::nullopt;
}

std::vector<int> ParallelismDecomposition::sizes() const {
  std::vector<int> out;
  out.reserve(classes.size());
  for (ElementSet c : classes) out.push_back(c.size());
  return out;
}

int ParallelismDecomposition::ClassOf(int e) const {
  for (int i = 0; i < count(); ++i) {
    if (classes[i].contains(e)) return i;
  }
  return -1;
}

GroundOrdering GroundOrdering::Natural(int n) {
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  return FromSequence(std::move(order));
}

GroundOrdering GroundOrdering::FromSequence(std::vector<int> order) {
  const int n = static_cast<int>(order.size());
  std::vector<int> position(n, -1);
  for (int k = 0; k < n; ++k) {
    const int e = order[k];
    if (e < 0 || e >= n || position[e] != -1) {
      throw Error(ErrorCode::kInvalidArgument,
                  "ordering is not a permutation of 0.." +
                      std::to_string(n - 1));
    }
    position[e] = k;
  }
  GroundOrdering out;
  out.order_ = std::move(order);
  out.position_ = std::move(position);
  return out;
}

std::vector<std::vector<ElementSet>> IndependentSets(const Matroid& m) {
  // Every independent set is a subset of a basis; walk the submasks of each
  // basis and keep the first occurrence.
  std::vector<std::vector<ElementSet>> by_size(m.rank() + 1);
  std::vector<ElementSet> seen;
  for (ElementSet b : m.bases()) {
    const std::uint32_t full = b.bits();
    std::uint32_t sub = full;
    while (true) {
      seen.push_back(ElementSet(sub));
      if (sub == 0) break;
      sub = (sub - 1) & full;
    }
  }
  std::sort(seen.begin(), seen.end());
  seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
  for (ElementSet s : seen) by_size[s.size()].push_back(s);
  return by_size;
}

int RankOf(const Matroid& m, ElementSet s) {
  int best = 0;
  for (ElementSet b : m.bases()) best = std::max(best, (b & s).size());
  return best;
}

Matroid Dual(const Matroid& m) {
  const ElementSet ground = m.ground_set();
  std::vector<ElementSet> bases;
  bases.reserve(m.bases().size());
  for (ElementSet b : m.bases()) bases.push_back(ground - b);
  return Matroid::FromBases(m.size(), std::move(bases));
}

ElementSet Loops(const Matroid& m) {
  ElementSet covered;
  for (ElementSet b : m.bases()) covered = covered | b;
  return m.ground_set() - covered;
}

ElementSet Coloops(const Matroid& m) {
  ElementSet common = m.ground_set();
  for (ElementSet b : m.bases()) common = common & b;
  return common;
}

ParallelismDecomposition ParallelismClasses(const Matroid& m) {
  if (!Loops(m).empty()) {
    throw Error(ErrorCode::kHasLoops,
                "loops {" + Loops(m).ToString() + "} present");
  }
  ParallelismDecomposition out;
  std::vector<bool> assigned(m.size(), false);
  for (int e = 0; e < m.size(); ++e) {
    if (assigned[e]) continue;
    ElementSet cls = ElementSet::Singleton(e);
    assigned[e] = true;
    for (int f = e + 1; f < m.size(); ++f) {
      if (!assigned[f] && !m.IsIndependent(ElementSet::Singleton(e).With(f))) {
        cls = cls.With(f);
        assigned[f] = true;
      }
    }
    out.classes.push_back(cls);
  }
  return out;
}

Matroid Restrict(const Matroid& m, ElementSet s) {
  const std::vector<int> kept = (s & m.ground_set()).elements();
  const int target_rank = RankOf(m, s);
  std::vector<ElementSet> bases;
  for (ElementSet b : m.bases()) {
    const ElementSet inside = b & s;
    if (inside.size() != target_rank) continue;
    ElementSet relabelled;
    for (int k = 0; k < static_cast<int>(kept.size()); ++k) {
      if (inside.contains(kept[k])) relabelled = relabelled.With(k);
    }
    bases.push_back(relabelled);
  }
  return Matroid::FromBases(static_cast<int>(kept.size()), std::move(bases));
}

Matroid Simplify(const Matroid& m) {
  const ParallelismDecomposition classes = ParallelismClasses(m);
  ElementSet representatives;
  for (ElementSet c : classes.classes) {
    representatives = representatives.With(c.elements().front());
  }
  return Restrict(m, representatives);
}

Matroid ContractColoops(const Matroid& m) {
  const ElementSet coloops = Coloops(m);
  const std::vector<int> kept = (m.ground_set() - coloops).elements();
  std::vector<ElementSet> bases;
  bases.reserve(m.bases().size());
  for (ElementSet b : m.bases()) {
    ElementSet relabelled;
    for (int k = 0; k < static_cast<int>(kept.size()); ++k) {
      if (b.contains(kept[k])) relabelled = relabelled.With(k);
    }
    bases.push_back(relabelled);
  }
  return Matroid::FromBases(static_cast<int>(kept.size()), std::move(bases));
}

Matroid DeleteLoops(const Matroid& m) {
  return Restrict(m, m.ground_set() - Loops(m));
}

}  // namespace stanley
