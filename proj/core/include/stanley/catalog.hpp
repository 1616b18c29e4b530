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
#ifndef STANLEY_CATALOG_HPP_
#define STANLEY_CATALOG_HPP_

#include <span>
#include <utility>
#include <vector>

#include "stanley/matroid.hpp"

namespace stanley {

Matroid Uniform(int rank, int n);
Matroid FreeMatroid(int n);
Matroid Fano();

// Cycle matroid of a graph on vertices 0..vertex_count-1; edge k is element k.
Matroid Graphic(int vertex_count, std::span<const std::pair<int, int>> edges);
Matroid CompleteGraphK4();

// Loopless rank-2 matroid whose parallelism classes have the given sizes,
// labelled contiguously: class 0 is {0..s_0-1}, class 1 follows, and so on.
// Needs at least two classes.
Matroid RankTwoFromClassSizes(std::span<const int> sizes);

// Small named matroids used by tests and the CLI: uniform matroids up to
// eight elements, the Fano plane and M(K4).
std::vector<NamedMatroid> BuiltinCatalog();

}  // namespace stanley

#endif  // STANLEY_CATALOG_HPP_
