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
#include "stanley/element_set.hpp"

#include "stanley/errors.hpp"

namespace stanley {

ElementSet ElementSet::Of(const std::vector<int>& elements) {
  std::uint32_t bits = 0;
  for (int e : elements) {
    if (e < 0 || e >= kMaxGroundSize) {
      throw Error(ErrorCode::kInvalidArgument,
                  "element " + std::to_string(e) + " out of range");
    }
    bits |= std::uint32_t{1} << e;
  }
  return ElementSet(bits);
}

std::vector<int> ElementSet::elements() const {
  std::vector<int> out;
  out.reserve(size());
  for (std::uint32_t rest = bits_; rest != 0; rest &= rest - 1) {
    out.push_back(std::countr_zero(rest));
  }
  return out;
}

std::string ElementSet::ToString() const {
  if (empty()) return "-";
  std::string out;
  for (int e : elements()) {
    if (!out.empty()) out += ',';
    out += std::to_string(e);
  }
  return out;
}

}  // namespace stanley
