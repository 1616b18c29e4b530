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
#include "stanley/catalog.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "stanley/errors.hpp"

namespace stanley {
namespace {

std::vector<ElementSet> SubsetsOfSize(int n, int r) {
  std::vector<ElementSet> out;
  for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << n); ++bits) {
    if (ElementSet(bits).size() == r) out.push_back(ElementSet(bits));
  }
  return out;
}

int Find(std::vector<int>& parent, int v) {
  while (parent[v] != v) v = parent[v] = parent[parent[v]];
  return v;
}

// Number of components after adding the chosen edges, or -1 on a cycle.
int ForestComponents(int vertex_count,
                     std::span<const std::pair<int, int>> edges,
                     ElementSet chosen) {
  std::vector<int> parent(vertex_count);
  std::iota(parent.begin(), parent.end(), 0);
  int components = vertex_count;
  for (int k : chosen.elements()) {
    const int a = Find(parent, edges[k].first);
    const int b = Find(parent, edges[k].second);
    if (a == b) return -1;
    parent[a] = b;
    --components;
  }
  return components;
}

}  // namespace

Matroid Uniform(int rank, int n) {
  if (rank < 0 || rank > n || n > 20) {
    throw Error(ErrorCode::kInvalidArgument,
                "no uniform matroid U(" + std::to_string(rank) + "," +
                    std::to_string(n) + ")");
  }
  return Matroid::FromBases(n, SubsetsOfSize(n, rank));
}

Matroid FreeMatroid(int n) { return Uniform(n, n); }

Matroid Fano() {
  const std::vector<ElementSet> lines = {
      ElementSet::Of({0, 1, 2}), ElementSet::Of({0, 3, 4}),
      ElementSet::Of({0, 5, 6}), ElementSet::Of({1, 3, 5}),
      ElementSet::Of({1, 4, 6}), ElementSet::Of({2, 3, 6}),
      ElementSet::Of({2, 4, 5})};
  std::vector<ElementSet> bases;
  for (ElementSet s : SubsetsOfSize(7, 3)) {
    if (std::find(lines.begin(), lines.end(), s) == lines.end()) {
      bases.push_back(s);
    }
  }
  return Matroid::FromBases(7, std::move(bases));
}

Matroid Graphic(int vertex_count, std::span<const std::pair<int, int>> edges) {
  const int m = static_cast<int>(edges.size());
  if (m > 20) {
    throw Error(ErrorCode::kInvalidArgument, "too many edges");
  }
  for (const auto& [a, b] : edges) {
    if (a < 0 || b < 0 || a >= vertex_count || b >= vertex_count) {
      throw Error(ErrorCode::kInvalidArgument, "edge endpoint out of range");
    }
  }
  // Bases are the maximal forests; find their size first.
  int best = 0;
  std::vector<ElementSet> forests;
  for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << m); ++bits) {
    const ElementSet s(bits);
    if (ForestComponents(vertex_count, edges, s) < 0) continue;
    if (s.size() > best) {
      best = s.size();
      forests.clear();
    }
    if (s.size() == best) forests.push_back(s);
  }
  return Matroid::FromBases(m, std::move(forests));
}

Matroid CompleteGraphK4() {
  const std::pair<int, int> edges[] = {{0, 1}, {0, 2}, {0, 3},
                                       {1, 2}, {1, 3}, {2, 3}};
  return Graphic(4, edges);
}

Matroid RankTwoFromClassSizes(std::span<const int> sizes) {
  if (sizes.size() < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "a rank-2 matroid needs at least two parallelism classes");
  }
  std::vector<int> class_of;
  for (int c = 0; c < static_cast<int>(sizes.size()); ++c) {
    if (sizes[c] < 1) {
      throw Error(ErrorCode::kInvalidArgument, "class sizes must be positive");
    }
    class_of.insert(class_of.end(), sizes[c], c);
  }
  const int n = static_cast<int>(class_of.size());
  std::vector<ElementSet> bases;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (class_of[a] != class_of[b]) bases.push_back(ElementSet::Of({a, b}));
    }
  }
  return Matroid::FromBases(n, std::move(bases));
}

std::vector<NamedMatroid> BuiltinCatalog() {
  std::vector<NamedMatroid> out;
  for (int n = 1; n <= 8; ++n) {
    for (int r = 0; r <= n; ++r) {
      out.push_back({"U" + std::to_string(r) + std::to_string(n), Uniform(r, n)});
    }
  }
  out.push_back({"fano", Fano()});
  out.push_back({"MK4", CompleteGraphK4()});
  return out;
}

}  // namespace stanley
