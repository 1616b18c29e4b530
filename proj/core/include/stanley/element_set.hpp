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

#ifndef STANLEY_ELEMENT_SET_HPP_
#define STANLEY_ELEMENT_SET_HPP_

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace stanley {

// Largest ground set representable by ElementSet.
inline constexpr int kMaxGroundSize = 32;

// A subset of the ground set {0, ..., n-1} stored as a bitmask.
class ElementSet {
 public:
  constexpr ElementSet() = default;
  constexpr explicit ElementSet(std::uint32_t bits) : bits_(bits) {}

  static ElementSet Of(const std::vector<int>& elements);
  // The full ground set {0, ..., n-1}.
  static constexpr ElementSet Full(int n) {
    return ElementSet(n >= 32 ? ~std::uint32_t{0}
                              : (std::uint32_t{1} << n) - 1);
  }
  static constexpr ElementSet Singleton(int e) {
    return ElementSet(std::uint32_t{1} << e);
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int e) const { return (bits_ >> e) & 1u; }
  constexpr bool IsSubsetOf(ElementSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }

  constexpr ElementSet With(int e) const {
    return ElementSet(bits_ | (std::uint32_t{1} << e));
  }
  constexpr ElementSet Without(int e) const {
    return ElementSet(bits_ & ~(std::uint32_t{1} << e));
  }

  // Elements in increasing order.
  std::vector<int> elements() const;

  // Comma-separated element list, e.g. "0,2,5"; "-" for the empty set.
  std::string ToString() const;

  friend constexpr ElementSet operator&(ElementSet a, ElementSet b) {
    return ElementSet(a.bits_ & b.bits_);
  }
  friend constexpr ElementSet operator|(ElementSet a, ElementSet b) {
    return ElementSet(a.bits_ | b.bits_);
  }
  // Set difference a \ b.
  friend constexpr ElementSet operator-(ElementSet a, ElementSet b) {
    return ElementSet(a.bits_ & ~b.bits_);
  }
  friend constexpr bool operator==(ElementSet, ElementSet) = default;
  friend constexpr auto operator<=>(ElementSet, ElementSet) = default;

 private:
  std::uint32_t bits_ = 0;
};

}  // namespace stanley

#endif  // STANLEY_ELEMENT_SET_HPP_
