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
#ifndef STANLEY_ENUMERATE_HPP_
#define STANLEY_ENUMERATE_HPP_

#include <functional>
#include <optional>
#include <vector>

#include "stanley/matroid.hpp"

namespace stanley {

inline constexpr int kDefaultEnumerationCap = 6;
inline constexpr int kHardEnumerationCap = 7;

// Calls visit once for every labelled loopless matroid on {0, ..., n-1} of
// the given rank (every rank when rank is empty). The order is deterministic:
// rank ascending, then depth-first over the r-subsets in increasing bitmask
// order with "include" explored before "exclude".
//
// Throws kCapExceeded if n > cap or cap > kHardEnumerationCap.
void ForEachMatroid(int n, std::optional<int> rank,
                    const std::function<void(const Matroid&)>& visit,
                    int cap = kDefaultEnumerationCap);

std::vector<Matroid> EnumerateMatroids(int n, std::optional<int> rank,
                                       int cap = kDefaultEnumerationCap);

}  // namespace stanley

#endif  // STANLEY_ENUMERATE_HPP_
