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
#include "stanley/multicomplex.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <functional>
#include <numeric>
#include <set>
#include <unordered_set>

#include "stanley/errors.hpp"

namespace stanley {
namespace {

// Calls visit with the exponent vector of every divisor of g.
void ForEachDivisor(const Monomial& g,
                    const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> current(g.arity(), 0);
  while (true) {
    visit(current);
    int v = 0;
    while (v < g.arity() && current[v] == g[v]) current[v++] = 0;
    if (v == g.arity()) return;
    ++current[v];
  }
}

class LiteralParser {
 public:
  explicit LiteralParser(std::string_view text) : text_(text) {}

  std::vector<Monomial> ParseList() {
    Expect('[');
    std::vector<Monomial> out;
    if (Peek() == ']') Fail("empty generator list");
    while (true) {
      out.push_back(ParseMonomial());
      if (Peek() == ',') {
        ++pos_;
        continue;
      }
      Expect(']');
      break;
    }
    if (Peek() != '\0') Fail("trailing characters");
    return out;
  }

 private:
  Monomial ParseMonomial() {
    Expect('[');
    std::vector<int> exponents;
    if (Peek() == ']') {
      ++pos_;
      return Monomial(std::move(exponents));
    }
    while (true) {
      exponents.push_back(ParseExponent());
      if (Peek() == ',') {
        ++pos_;
        continue;
      }
      Expect(']');
      return Monomial(std::move(exponents));
    }
  }

  int ParseExponent() {
    Peek();
    const std::size_t start = pos_;
    long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_++] - '0');
      if (value > 1000000) Fail("exponent too large");
    }
    if (pos_ == start) Fail("expected a nonnegative integer");
    return static_cast<int>(value);
  }

  char Peek() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void Expect(char c) {
    if (Peek() != c) Fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  [[noreturn]] void Fail(const std::string& message) const {
    throw Error(ErrorCode::kParseError,
                message + " at offset " + std::to_string(pos_) + " in '" +
                    std::string(text_) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

int CheckedArity(std::span<const Monomial> monomials) {
  if (monomials.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "empty monomial family");
  }
  const int arity = monomials.front().arity();
  for (const Monomial& m : monomials) {
    if (m.arity() != arity) {
      throw Error(ErrorCode::kInvalidArgument, "monomials of mixed arity");
    }
  }
  return arity;
}

}  // namespace

Monomial::Monomial(std::vector<int> exponents) : exponents_(std::move(exponents)) {
  for (int a : exponents_) {
    if (a < 0) throw Error(ErrorCode::kInvalidArgument, "negative exponent");
    degree_ += a;
  }
}

bool Monomial::Divides(const Monomial& other) const {
  if (arity() != other.arity() || degree_ > other.degree_) return false;
  for (int v = 0; v < arity(); ++v) {
    if (exponents_[v] > other.exponents_[v]) return false;
  }
  return true;
}

Monomial Monomial::Times(int variable, int power) const {
  std::vector<int> exponents = exponents_;
  exponents.at(variable) += power;
  return Monomial(std::move(exponents));
}

std::string Monomial::ToString() const {
  std::string out = "[";
  for (int v = 0; v < arity(); ++v) {
    if (v > 0) out += ',';
    out += std::to_string(exponents_[v]);
  }
  return out + "]";
}

std::size_t MonomialHash::operator()(const Monomial& m) const {
  std::size_t h = 0xcbf29ce484222325ull;
  for (int a : m.exponents()) {
    h ^= static_cast<std::size_t>(a) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

GeneratorSet GeneratorSet::FromMonomials(std::vector<Monomial> monomials) {
  GeneratorSet out;
  out.arity_ = CheckedArity(monomials);
  out.monomials_ = MaximalMembers(monomials);
  return out;
}

GeneratorSet GeneratorSet::Parse(std::string_view literal) {
  std::vector<Monomial> monomials = LiteralParser(literal).ParseList();
  for (const Monomial& m : monomials) {
    if (m.arity() != monomials.front().arity()) {
      throw Error(ErrorCode::kParseError, "monomials of mixed arity in '" +
                                              std::string(literal) + "'");
    }
  }
  return FromMonomials(std::move(monomials));
}

int GeneratorSet::TopDegree() const {
  int top = 0;
  for (const Monomial& m : monomials_) top = std::max(top, m.degree());
  return top;
}

std::string GeneratorSet::ToString() const {
  std::string out = "[";
  for (std::size_t i = 0; i < monomials_.size(); ++i) {
    if (i > 0) out += ',';
    out += monomials_[i].ToString();
  }
  return out + "]";
}

std::string OSequence::ToString() const {
  std::string out = "(";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(entries[i]);
  }
  return out + ")";
}

bool OSequence::Matches(const HVector& h) const {
  std::size_t own = entries.size();
  while (own > 1 && entries[own - 1] == 0) --own;
  const HVector target = h.Trimmed();
  if (own != target.entries.size()) return false;
  for (std::size_t i = 0; i < own; ++i) {
    if (target.entries[i] != entries[i]) return false;
  }
  return true;
}

OrderIdeal OrderIdeal::FromMembers(int arity, std::vector<Monomial> members) {
  for (const Monomial& m : members) {
    if (m.arity() != arity) {
      throw Error(ErrorCode::kInvalidArgument, "member of wrong arity");
    }
  }
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (!IsOrderIdeal(members)) {
    throw Error(ErrorCode::kInvalidArgument,
                "family is not closed under division");
  }
  OrderIdeal out;
  out.arity_ = arity;
  for (Monomial& m : members) {
    if (static_cast<int>(out.levels_.size()) <= m.degree()) {
      out.levels_.resize(m.degree() + 1);
    }
    out.levels_[m.degree()].push_back(std::move(m));
  }
  return out;
}

std::size_t OrderIdeal::size() const {
  std::size_t total = 0;
  for (const auto& level : levels_) total += level.size();
  return total;
}

bool OrderIdeal::contains(const Monomial& m) const {
  if (m.arity() != arity_ || m.degree() >= static_cast<int>(levels_.size())) {
    return false;
  }
  const auto& level = levels_[m.degree()];
  return std::binary_search(level.begin(), level.end(), m);
}

std::vector<Monomial> OrderIdeal::members() const {
  std::vector<Monomial> out;
  for (const auto& level : levels_) out.insert(out.end(), level.begin(), level.end());
  return out;
}

OSequence OrderIdeal::Counts() const {
  OSequence out;
  for (const auto& level : levels_) out.entries.push_back(level.size());
  return out;
}

GeneratorSet OrderIdeal::Generators() const {
  return GeneratorSet::FromMonomials(members());
}

bool OrderIdeal::IsPure() const { return stanley::IsPure(Generators()); }

OrderIdeal Closure(const GeneratorSet& generators) {
  std::set<Monomial> seen;
  for (const Monomial& g : generators.monomials()) {
    ForEachDivisor(g, [&](const std::vector<int>& exponents) {
      seen.insert(Monomial(exponents));
    });
  }
  return OrderIdeal::FromMembers(generators.arity(), {seen.begin(), seen.end()});
}

OSequence OSequenceOf(const GeneratorSet& generators) {
  int widest = 0;
  for (const Monomial& g : generators.monomials()) {
    for (int a : g.exponents()) widest = std::max(widest, a);
  }
  const int bits = std::max(1, static_cast<int>(std::bit_width(static_cast<unsigned>(widest))));
  if (generators.arity() * bits > 64) {
    return Closure(generators).Counts();
  }
  const int top = generators.TopDegree();
  std::vector<std::unordered_set<std::uint64_t>> by_degree(top + 1);
  for (const Monomial& g : generators.monomials()) {
    ForEachDivisor(g, [&](const std::vector<int>& exponents) {
      std::uint64_t key = 0;
      int degree = 0;
      for (int a : exponents) {
        key = (key << bits) | static_cast<std::uint64_t>(a);
        degree += a;
      }
      by_degree[degree].insert(key);
    });
  }
  OSequence out;
  for (const auto& level : by_degree) out.entries.push_back(level.size());
  return out;
}

bool IsPure(const GeneratorSet& generators) {
  const int top = generators.TopDegree();
  return std::all_of(generators.monomials().begin(), generators.monomials().end(),
                     [top](const Monomial& m) { return m.degree() == top; });
}

bool IsOrderIdeal(std::span<const Monomial> monomials) {
  const int arity = CheckedArity(monomials);
  std::unordered_set<Monomial, MonomialHash> members(monomials.begin(),
                                                     monomials.end());
  // Closed under division iff closed under dividing by single variables.
  for (const Monomial& m : monomials) {
    for (int v = 0; v < arity; ++v) {
      if (m[v] > 0 && !members.contains(m.Times(v, -1))) return false;
    }
  }
  return true;
}

std::vector<Monomial> MaximalMembers(std::span<const Monomial> monomials) {
  std::vector<Monomial> sorted(monomials.begin(), monomials.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<Monomial> out;
  for (const Monomial& m : sorted) {
    const bool dominated = std::any_of(sorted.begin(), sorted.end(), [&](const Monomial& other) {
      return other != m && m.Divides(other);
    });
    if (!dominated) out.push_back(m);
  }
  return out;
}

std::vector<Monomial> MonomialsOfDegree(int arity, int degree) {
  std::vector<Monomial> out;
  if (arity == 0) {
    if (degree == 0) out.push_back(Monomial::One(0));
    return out;
  }
  std::vector<int> exponents(arity, 0);
  std::function<void(int, int)> fill = [&](int v, int remaining) {
    if (v == arity - 1) {
      exponents[v] = remaining;
      out.push_back(Monomial(exponents));
      return;
    }
    for (int a = 0; a <= remaining; ++a) {
      exponents[v] = a;
      fill(v + 1, remaining - a);
    }
  };
  fill(0, degree);
  return out;
}

}  // namespace stanley
