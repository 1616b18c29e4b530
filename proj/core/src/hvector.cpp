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
#include "stanley/hvector.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "stanley/errors.hpp"

namespace stanley {

int HVector::EffectiveDegree() const {
  for (int i = degree(); i > 0; --i) {
    if (entries[i] != 0) return i;
  }
  return 0;
}

HVector HVector::Trimmed() const {
  if (entries.empty()) return *this;
  HVector out = *this;
  out.entries.resize(EffectiveDegree() + 1);
  return out;
}

std::string HVector::ToString() const {
  std::string out = "(";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i > 0) out += ' ';
    out += entries[i].str();
  }
  return out + ")";
}

HVector HVector::Parse(std::string_view text) {
  std::string cleaned(text);
  const auto first = cleaned.find_first_not_of(" \t");
  const auto last = cleaned.find_last_not_of(" \t\r\n");
  if (first == std::string::npos) {
    throw Error(ErrorCode::kParseError, "empty h-vector");
  }
  cleaned = cleaned.substr(first, last - first + 1);
  if (cleaned.front() == '(') {
    if (cleaned.back() != ')') {
      throw Error(ErrorCode::kParseError, "unbalanced '(' in h-vector");
    }
    cleaned = cleaned.substr(1, cleaned.size() - 2);
  }
  std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
  std::istringstream tokens(cleaned);
  HVector h;
  for (std::string t; tokens >> t;) {
    const std::size_t digits_from = (t[0] == '-') ? 1 : 0;
    if (t.size() == digits_from ||
        !std::all_of(t.begin() + digits_from, t.end(),
                     [](unsigned char c) { return std::isdigit(c); })) {
      throw Error(ErrorCode::kParseError, "bad h-vector entry '" + t + "'");
    }
    h.entries.emplace_back(t);
  }
  if (h.entries.empty()) {
    throw Error(ErrorCode::kParseError, "empty h-vector");
  }
  return h;
}

Integer Binomial(const Integer& n, int k) {
  if (k < 0 || n < k) return 0;
  Integer out = 1;
  for (int i = 0; i < k; ++i) {
    out *= n - i;
    out /= i + 1;
  }
  return out;
}

Integer MonomialCount(const Integer& variables, int degree) {
  if (degree == 0) return 1;
  if (variables <= 0) return 0;
  return Binomial(variables + degree - 1, degree);
}

FVector FVectorOf(const Matroid& m) {
  FVector f;
  for (const auto& level : IndependentSets(m)) {
    f.entries.emplace_back(level.size());
  }
  return f;
}

HVector HFromF(const FVector& f, int rank) {
  if (rank < 0 || static_cast<int>(f.entries.size()) != rank + 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "f-vector length must be rank+1");
  }
  HVector h;
  h.entries.assign(rank + 1, 0);
  for (int j = 0; j <= rank; ++j) {
    for (int i = 0; i <= j; ++i) {
      const Integer term = Binomial(rank - i, j - i) * f.entries[i];
      if ((j - i) % 2 == 0) {
        h.entries[j] += term;
      } else {
        h.entries[j] -= term;
      }
    }
  }
  return h;
}

FVector FFromH(const HVector& h) {
  const int d = h.degree();
  FVector f;
  f.entries.assign(d + 1, 0);
  for (int i = 0; i <= d; ++i) {
    for (int j = 0; j <= i; ++j) {
      f.entries[i] += Binomial(d - j, i - j) * h.entries[j];
    }
  }
  return f;
}

HVector HVectorOf(const Matroid& m) { return HFromF(FVectorOf(m), m.rank()); }

int InternallyPassiveCount(const Matroid& m, ElementSet basis,
                           const GroundOrdering& order) {
  const ElementSet outside = m.ground_set() - basis;
  int count = 0;
  for (int v : basis.elements()) {
    for (int u : outside.elements()) {
      if (order.Less(u, v) && m.IsBasis(basis.Without(v).With(u))) {
        ++count;
        break;
      }
    }
  }
  return count;
}

int ExternallyPassiveCount(const Matroid& m, ElementSet basis,
                           const GroundOrdering& order) {
  const ElementSet outside = m.ground_set() - basis;
  int count = 0;
  for (int v : outside.elements()) {
    for (int u : basis.elements()) {
      if (order.Less(u, v) && m.IsBasis(basis.Without(u).With(v))) {
        ++count;
        break;
      }
    }
  }
  return count;
}

HVector HViaInternalPassivity(const Matroid& m, const GroundOrdering& order) {
  if (order.size() != m.size()) {
    throw Error(ErrorCode::kInvalidArgument, "ordering size mismatch");
  }
  HVector h;
  h.entries.assign(m.rank() + 1, 0);
  for (ElementSet b : m.bases()) h.entries[InternallyPassiveCount(m, b, order)] += 1;
  return h;
}

HVector HViaExternalPassivity(const Matroid& m, const GroundOrdering& order) {
  if (order.size() != m.size()) {
    throw Error(ErrorCode::kInvalidArgument, "ordering size mismatch");
  }
  const Matroid dual = Dual(m);
  HVector h;
  h.entries.assign(m.rank() + 1, 0);
  for (ElementSet b : dual.bases()) {
    h.entries[ExternallyPassiveCount(dual, b, order)] += 1;
  }
  return h;
}

Integer BrownColbourn(const HVector& h, int s, const Integer& alpha) {
  if (s < 0 || s > h.degree()) {
    throw Error(ErrorCode::kInvalidArgument, "index s out of range");
  }
  // Horner form from the top coefficient down.
  Integer acc = 0;
  for (int i = s; i >= 0; --i) acc = acc * (-alpha) + h.entries[i];
  return s % 2 == 0 ? acc : Integer(-acc);
}

bool StructuralReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.passed; });
}

std::string StructuralReport::Summary() const {
  for (const CheckResult& c : checks) {
    if (!c.passed) return c.name + ": " + c.detail;
  }
  return "ok";
}

StructuralReport StructuralChecks(const HVector& h,
                                  std::optional<Integer> alpha_max) {
  StructuralReport report;
  if (h.entries.empty()) {
    report.checks.push_back({"h0", false, "empty vector"});
    return report;
  }
  const int d = h.EffectiveDegree();
  report.effective_degree = d;
  const auto& e = h.entries;

  CheckResult h0{"h0", e[0] == 1, ""};
  if (!h0.passed) h0.detail = "h_0 = " + e[0].str();
  report.checks.push_back(h0);

  CheckResult nonnegative{"nonnegative", true, ""};
  for (int i = 0; i <= h.degree(); ++i) {
    if (e[i] < 0) {
      nonnegative = {"nonnegative", false, "h_" + std::to_string(i) + " < 0"};
      break;
    }
  }
  report.checks.push_back(nonnegative);

  CheckResult rising{"nondecreasing", true, ""};
  for (int i = 1; i <= d / 2; ++i) {
    if (e[i - 1] > e[i]) {
      rising = {"nondecreasing", false,
                "h_" + std::to_string(i - 1) + " > h_" + std::to_string(i)};
      break;
    }
  }
  report.checks.push_back(rising);

  CheckResult mirror{"lower-half-dominated", true, ""};
  for (int i = 0; i <= d / 2; ++i) {
    if (e[i] > e[d - i]) {
      mirror = {"lower-half-dominated", false,
                "h_" + std::to_string(i) + " > h_" + std::to_string(d - i)};
      break;
    }
  }
  report.checks.push_back(mirror);

  Integer bound = 5;
  for (int i = 0; i <= d; ++i) bound = std::max(bound, e[i]);
  if (alpha_max) bound = *alpha_max;
  CheckResult bc{"brown-colbourn", true, ""};
  const HVector effective{{e.begin(), e.begin() + d + 1}};
  for (int s = 0; s <= d && bc.passed; ++s) {
    for (Integer alpha = 1; alpha <= bound; ++alpha) {
      Integer value = BrownColbourn(effective, s, alpha);
      if (value < 0) {
        bc = {"brown-colbourn", false,
              "s=" + std::to_string(s) + " alpha=" + alpha.str() +
                  " value=" + value.str()};
        report.brown_colbourn_failure = BrownColbournFailure{s, alpha, value};
        break;
      }
    }
  }
  report.checks.push_back(bc);

  CheckResult counting{"counting-bound", true, ""};
  for (int i = 1; i <= d; ++i) {
    const Integer available = MonomialCount(e.size() > 1 ? e[1] : Integer(0), i);
    if (e[i] > available) {
      counting = {"counting-bound", false,
                  "h_" + std::to_string(i) + " = " + e[i].str() + " > " +
                      available.str() + " monomials of degree " +
                      std::to_string(i)};
      break;
    }
  }
  report.checks.push_back(counting);
  return report;
}

}  // namespace stanley
