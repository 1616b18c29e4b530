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
#include "stanley/witnesses.hpp"

#include <algorithm>
#include <set>

#include "stanley/errors.hpp"

namespace stanley {
namespace {

Monomial Product(int arity, std::initializer_list<int> variables) {
  std::vector<int> exponents(arity, 0);
  for (int v : variables) ++exponents[v];
  return Monomial(std::move(exponents));
}

void CheckSizes(std::span<const int> sizes) {
  for (int s : sizes) {
    if (s < 1) {
      throw Error(ErrorCode::kInvalidParameters, "class sizes must be positive");
    }
  }
}

// Elementary symmetric sums e_1, e_2, e_3 of (s_i - 1).
struct ReducedSums {
  Integer e1 = 0, e2 = 0, e3 = 0;
};

ReducedSums SumsOf(std::span<const int> sizes) {
  ReducedSums out;
  for (int s : sizes) {
    const Integer r = s - 1;
    out.e3 += out.e2 * r;
    out.e2 += out.e1 * r;
    out.e1 += r;
  }
  return out;
}

// Monomials of 'degree' in the free variables 0..free_count-1.
std::vector<Monomial> FreeMonomials(int arity, int free_count, int degree) {
  std::vector<Monomial> out;
  for (const Monomial& m : MonomialsOfDegree(free_count, degree)) {
    std::vector<int> exponents = m.exponents();
    exponents.resize(arity, 0);
    out.push_back(Monomial(std::move(exponents)));
  }
  return out;
}

struct UpperLevels {
  VariableLayout layout;
  std::vector<Monomial> low;  // degrees 0..2
  std::vector<Monomial> top;  // degree 3
};

UpperLevels BuildUpper(std::span<const int> sizes, int rank) {
  CheckSizes(sizes);
  const int t = static_cast<int>(sizes.size());
  if (rank < 0 || t < rank) {
    throw Error(ErrorCode::kInvalidParameters,
                "need at least as many classes as the rank (t=" +
                    std::to_string(t) + ", d=" + std::to_string(rank) + ")");
  }
  UpperLevels out;
  out.layout = VariableLayout::Make(sizes, t - rank);
  const VariableLayout& L = out.layout;
  const int k = L.arity();
  const int free_count = L.free_count;

  out.low.push_back(Monomial::One(k));
  for (int v = 0; v < k; ++v) out.low.push_back(Product(k, {v}));
  for (int i = 0; i < t; ++i) {
    for (int j = i + 1; j < t; ++j) {
      for (int e : L.extra[i]) {
        for (int f : L.extra[j]) out.low.push_back(Product(k, {e, f}));
      }
    }
  }
  for (int j = 0; j < free_count; ++j) {
    for (const auto& cls : L.extra) {
      for (int e : cls) out.low.push_back(Product(k, {j, e}));
    }
  }
  for (Monomial& m : FreeMonomials(k, free_count, 2)) out.low.push_back(std::move(m));

  for (int i = 0; i < t; ++i) {
    for (int j = i + 1; j < t; ++j) {
      for (int l = j + 1; l < t; ++l) {
        for (int e : L.extra[i]) {
          for (int f : L.extra[j]) {
            for (int g : L.extra[l]) out.top.push_back(Product(k, {e, f, g}));
          }
        }
      }
    }
  }
  for (int free = 0; free < free_count; ++free) {
    for (int i = 0; i < t; ++i) {
      for (int j = i + 1; j < t; ++j) {
        for (int e : L.extra[i]) {
          for (int f : L.extra[j]) out.top.push_back(Product(k, {free, e, f}));
        }
      }
    }
  }
  for (int a = 0; a < free_count; ++a) {
    for (int b = a + 1; b < free_count; ++b) {
      for (const auto& cls : L.extra) {
        for (int e : cls) out.top.push_back(Product(k, {a, b, e}));
      }
    }
  }
  for (int a = 0; a < free_count; ++a) {
    for (const auto& cls : L.extra) {
      for (int e : cls) out.top.push_back(Product(k, {a, a, e}));
    }
  }
  for (Monomial& m : FreeMonomials(k, free_count, 3)) out.top.push_back(std::move(m));
  std::sort(out.top.begin(), out.top.end());
  return out;
}

std::vector<Monomial> LowerTop(const VariableLayout& L, int t) {
  const int k = L.arity();
  std::vector<Monomial> top;
  for (int i = 0; i < t; ++i) {
    for (int j = i + 1; j < t; ++j) {
      for (int e : L.extra[i]) {
        for (int f : L.extra[j]) top.push_back(Product(k, {0, e, f}));
      }
    }
  }
  for (int j = 1; j < L.free_count; ++j) {
    for (const auto& cls : L.extra) {
      for (int e : cls) top.push_back(Product(k, {j, j, e}));
    }
  }
  for (int i = 0; i < L.free_count; ++i) {
    for (int j = i + 1; j < L.free_count; ++j) top.push_back(Product(k, {i, i, j}));
  }
  int first_extra = -1;
  for (const auto& cls : L.extra) {
    if (!cls.empty()) {
      first_extra = cls.front();
      break;
    }
  }
  top.push_back(first_extra >= 0 ? Product(k, {0, 0, first_extra})
                                 : Product(k, {0, 0, 0}));
  std::sort(top.begin(), top.end());
  return top;
}

bool PureWith(const std::vector<Monomial>& low, const std::vector<Monomial>& top) {
  std::vector<Monomial> members = low;
  members.insert(members.end(), top.begin(), top.end());
  return IsPure(GeneratorSet::FromMonomials(std::move(members)));
}

// Chooses 'count' monomials from 'pool' (sorted) to add to 'base' so that
// low + base + chosen is pure. Tries a covering pass first, then an
// exhaustive pass over small pools.
std::optional<std::vector<Monomial>> RepairTop(const std::vector<Monomial>& low,
                                               const std::vector<Monomial>& base,
                                               const std::vector<Monomial>& pool,
                                               std::size_t count) {
  std::vector<Monomial> chosen = base;
  std::vector<bool> used(pool.size(), false);
  std::vector<Monomial> targets = low;
  std::sort(targets.begin(), targets.end(), [](const Monomial& a, const Monomial& b) {
    return a.degree() != b.degree() ? a.degree() > b.degree() : a < b;
  });
  std::size_t added = 0;
  for (const Monomial& need : targets) {
    if (added == count) break;
    const bool covered = std::any_of(chosen.begin(), chosen.end(),
                                     [&](const Monomial& m) { return need.Divides(m); });
    if (covered) continue;
    for (std::size_t p = 0; p < pool.size(); ++p) {
      if (!used[p] && need.Divides(pool[p])) {
        used[p] = true;
        chosen.push_back(pool[p]);
        ++added;
        break;
      }
    }
  }
  for (std::size_t p = 0; p < pool.size() && added < count; ++p) {
    if (!used[p]) {
      used[p] = true;
      chosen.push_back(pool[p]);
      ++added;
    }
  }
  if (added == count && PureWith(low, chosen)) return chosen;

  // Exhaustive fallback over count-subsets of the pool.
  constexpr std::size_t kMaxSubsets = 2000000;
  const Integer subsets = Binomial(Integer(pool.size()), static_cast<int>(count));
  if (subsets > kMaxSubsets) return std::nullopt;
  std::vector<std::size_t> pick(count);
  for (std::size_t i = 0; i < count; ++i) pick[i] = i;
  while (true) {
    std::vector<Monomial> trial = base;
    for (std::size_t i : pick) trial.push_back(pool[i]);
    if (PureWith(low, trial)) return trial;
    std::size_t i = count;
    while (i > 0 && pick[i - 1] == pool.size() - count + (i - 1)) --i;
    if (i == 0) return std::nullopt;
    ++pick[i - 1];
    for (std::size_t j = i; j < count; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace

WitnessCertificate CertifyMembers(std::vector<Monomial> members,
                                  const HVector& target, std::string method) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  WitnessCertificate cert;
  cert.target = target;
  cert.method = std::move(method);
  cert.generators = GeneratorSet::FromMonomials(members);
  cert.is_order_ideal = IsOrderIdeal(members);
  cert.is_pure = IsPure(cert.generators);
  for (const Monomial& m : members) {
    if (static_cast<int>(cert.sequence.entries.size()) <= m.degree()) {
      cert.sequence.entries.resize(m.degree() + 1, 0);
    }
    ++cert.sequence.entries[m.degree()];
  }
  cert.matches_target = cert.sequence.Matches(target);
  return cert;
}

WitnessCertificate CertifyGenerators(const GeneratorSet& generators,
                                     const HVector& target, std::string method) {
  WitnessCertificate cert;
  cert.target = target;
  cert.method = std::move(method);
  cert.generators = generators;
  cert.sequence = OSequenceOf(generators);
  const OrderIdeal closure = Closure(generators);
  cert.is_order_ideal = IsOrderIdeal(closure.members());
  cert.is_pure = IsPure(generators);
  cert.matches_target = cert.sequence.Matches(target) &&
                        closure.Counts() == cert.sequence;
  return cert;
}

int VariableLayout::arity() const {
  int total = free_count;
  for (const auto& cls : extra) total += static_cast<int>(cls.size());
  return total;
}

VariableLayout VariableLayout::Make(std::span<const int> sizes, int free_count) {
  VariableLayout out;
  out.free_count = free_count;
  int next = free_count;
  for (int s : sizes) {
    std::vector<int> cls;
    for (int i = 1; i < s; ++i) cls.push_back(next++);
    out.extra.push_back(std::move(cls));
  }
  return out;
}

HVector RankTwoHVector(std::span<const int> sizes) {
  CheckSizes(sizes);
  const int t = static_cast<int>(sizes.size());
  const ReducedSums sums = SumsOf(sizes);
  HVector h;
  h.entries = {1, sums.e1 + (t - 2),
               sums.e2 + Integer(t - 2) * sums.e1 + Binomial(t - 1, 2)};
  return h;
}

WitnessCertificate RankTwoWitness(std::span<const int> sizes) {
  CheckSizes(sizes);
  const int t = static_cast<int>(sizes.size());
  if (t < 2) {
    throw Error(ErrorCode::kInvalidParameters,
                "a rank-2 matroid has at least two classes");
  }
  const VariableLayout L = VariableLayout::Make(sizes, t - 2);
  const int k = L.arity();
  std::vector<Monomial> members = {Monomial::One(k)};
  for (int v = 0; v < k; ++v) members.push_back(Product(k, {v}));
  for (int i = 0; i < t; ++i) {
    for (int j = i + 1; j < t; ++j) {
      for (int e : L.extra[i]) {
        for (int f : L.extra[j]) members.push_back(Product(k, {e, f}));
      }
    }
  }
  for (int free = 0; free < L.free_count; ++free) {
    for (const auto& cls : L.extra) {
      for (int e : cls) members.push_back(Product(k, {free, e}));
    }
  }
  for (Monomial& m : FreeMonomials(k, L.free_count, 2)) members.push_back(std::move(m));
  return CertifyMembers(std::move(members), RankTwoHVector(sizes), "rank2");
}

GroundOrdering ClassSortedOrdering(const ParallelismDecomposition& classes) {
  std::vector<int> order;
  for (ElementSet cls : classes.classes) {
    for (int e : cls.elements()) order.push_back(e);
  }
  return GroundOrdering::FromSequence(std::move(order));
}

std::vector<CorankTwoAssignment> CorankTwoAssignments(const Matroid& m) {
  if (m.rank() != 2) {
    throw Error(ErrorCode::kNotRankTwo,
                "matroid has rank " + std::to_string(m.rank()));
  }
  const ParallelismDecomposition classes = ParallelismClasses(m);
  const GroundOrdering order = ClassSortedOrdering(classes);
  // class_end[c] is the position of the last element of class c.
  std::vector<int> class_end;
  int position = -1;
  for (ElementSet cls : classes.classes) {
    position += cls.size();
    class_end.push_back(position);
  }
  const int n = m.size();
  std::vector<CorankTwoAssignment> out;
  for (ElementSet b : m.bases()) {
    const std::vector<int> pair = b.elements();
    int i = order.position(pair[0]);
    int j = order.position(pair[1]);
    if (i > j) std::swap(i, j);
    const int later_class = classes.ClassOf(order.at(j));
    CorankTwoAssignment a;
    a.basis = b;
    a.a1 = class_end[later_class - 1] - i;
    a.a2 = n - 1 - j;
    a.monomial = Monomial({a.a1, a.a2});
    out.push_back(std::move(a));
  }
  return out;
}

WitnessCertificate CorankTwoWitness(const Matroid& m) {
  std::vector<Monomial> members;
  for (const CorankTwoAssignment& a : CorankTwoAssignments(m)) {
    members.push_back(a.monomial);
  }
  return CertifyMembers(std::move(members), HVectorOf(Dual(m)), "corank2");
}

WitnessCertificate CorankTwoWitnessOfDual(const Matroid& n) {
  if (n.corank() != 2) {
    throw Error(ErrorCode::kNotRankTwo,
                "matroid has corank " + std::to_string(n.corank()));
  }
  return CorankTwoWitness(Dual(n));
}

HVector RankThreeUpperH(std::span<const int> sizes, int rank) {
  CheckSizes(sizes);
  const Integer free = static_cast<int>(sizes.size()) - rank;
  const ReducedSums s = SumsOf(sizes);
  HVector h;
  h.entries = {1, s.e1 + free, s.e2 + free * s.e1 + Binomial(free + 1, 2),
               s.e3 + free * s.e2 + Binomial(free + 1, 2) * s.e1 +
                   Binomial(free + 2, 3)};
  return h;
}

HVector RankThreeLowerH(std::span<const int> sizes, int rank) {
  HVector h = RankThreeUpperH(sizes, rank);
  const Integer free = static_cast<int>(sizes.size()) - rank;
  const ReducedSums s = SumsOf(sizes);
  h.entries[3] = s.e2 + (free - 1) * s.e1 + Binomial(free, 2) + 1;
  return h;
}

OrderIdeal RankThreeUpper(std::span<const int> sizes, int rank) {
  UpperLevels levels = BuildUpper(sizes, rank);
  std::vector<Monomial> members = std::move(levels.low);
  members.insert(members.end(), levels.top.begin(), levels.top.end());
  return OrderIdeal::FromMembers(levels.layout.arity(), std::move(members));
}

OrderIdeal RankThreeLower(std::span<const int> sizes, int rank) {
  UpperLevels levels = BuildUpper(sizes, rank);
  const int t = static_cast<int>(sizes.size());
  if (t - rank < 1) {
    throw Error(ErrorCode::kInvalidParameters,
                "the lower ideal needs t > d so that x_1 exists");
  }
  if (RankThreeLowerH(sizes, rank).entries[3] < 1) {
    throw Error(ErrorCode::kInvalidParameters, "closed-form h_3 is not positive");
  }
  std::vector<Monomial> members = std::move(levels.low);
  for (Monomial& m : LowerTop(levels.layout, t)) members.push_back(std::move(m));
  return OrderIdeal::FromMembers(levels.layout.arity(), std::move(members));
}

RankThreeWitness RankThreeWitnessOf(const Matroid& m) {
  if (m.rank() != 3) {
    throw Error(ErrorCode::kNotRankThree,
                "matroid has rank " + std::to_string(m.rank()));
  }
  if (!Loops(m).empty()) {
    throw Error(ErrorCode::kHasLoops, "loops {" + Loops(m).ToString() + "}");
  }
  const HVector h = HVectorOf(m);
  const std::vector<int> sizes = ParallelismClasses(m).sizes();
  const int t = static_cast<int>(sizes.size());

  RankThreeWitness out;
  out.upper_h3 = RankThreeUpperH(sizes, 3).entries[3];
  out.lower_h3 = RankThreeLowerH(sizes, 3).entries[3];

  if (!Coloops(m).empty()) {
    // h_3 = 0: witness the contraction, whose ideal is the truncation.
    std::optional<WitnessCertificate> cert = ConstructWitness(m);
    out.certificate = std::move(*cert);
    out.certificate.method = "rank3-coloops/" + out.certificate.method;
    return out;
  }

  const HVector upper = RankThreeUpperH(sizes, 3);
  if (h.entries[1] != upper.entries[1] || h.entries[2] != upper.entries[2]) {
    throw Error(ErrorCode::kInternalMismatch,
                "h_1, h_2 of " + h.ToString() + " disagree with closed forms " +
                    upper.ToString());
  }
  const Integer& h3 = h.entries[3];
  if (h3 > out.upper_h3 || h3 < out.lower_h3) {
    throw Error(ErrorCode::kSandwichViolated,
                "h_3 = " + h3.str() + " outside [" + out.lower_h3.str() + ", " +
                    out.upper_h3.str() + "]");
  }

  UpperLevels levels = BuildUpper(sizes, 3);
  out.upper_top = levels.top;
  if (t > 3) out.lower_top = LowerTop(levels.layout, t);

  std::vector<Monomial> pool;
  std::set_difference(out.upper_top.begin(), out.upper_top.end(),
                      out.lower_top.begin(), out.lower_top.end(),
                      std::back_inserter(pool));
  if (h3 < out.lower_top.size() || h3 - out.lower_top.size() > pool.size()) {
    throw Error(ErrorCode::kInternalMismatch,
                "degree-3 families do not bracket h_3 = " + h3.str());
  }
  const std::size_t count =
      static_cast<std::size_t>(h3) - out.lower_top.size();

  std::vector<Monomial> chosen = out.lower_top;
  chosen.insert(chosen.end(), pool.begin(), pool.begin() + count);
  if (!PureWith(levels.low, chosen)) {
    std::optional<std::vector<Monomial>> repaired =
        RepairTop(levels.low, out.lower_top, pool, count);
    if (!repaired) {
      // The lower layer itself can be impure with no room left to cover it;
      // drop the containment and choose the whole layer from O_3.
      repaired = RepairTop(levels.low, {}, out.upper_top,
                           static_cast<std::size_t>(h3));
      out.lower_relaxed = repaired.has_value();
    }
    if (repaired) {
      chosen = std::move(*repaired);
      out.repaired = true;
    }
  }
  std::sort(chosen.begin(), chosen.end());
  out.chosen_top = chosen;

  std::vector<Monomial> members = std::move(levels.low);
  members.insert(members.end(), chosen.begin(), chosen.end());
  out.certificate = CertifyMembers(std::move(members), h, "rank3");
  return out;
}

WitnessCertificate TrivialWitness(const Matroid& m) {
  if (!Loops(m).empty() || !Coloops(m).empty()) {
    throw Error(ErrorCode::kInvalidParameters,
                "trivial witnesses need a matroid without loops or coloops");
  }
  const HVector h = HVectorOf(m);
  std::vector<Monomial> members;
  if (m.rank() == 0) {
    members.push_back(Monomial::One(0));
  } else if (m.rank() == 1) {
    const int k = m.size() - 1;
    members.push_back(Monomial::One(k));
    for (int v = 0; v < k; ++v) members.push_back(Product(k, {v}));
  } else if (m.corank() == 1) {
    for (int a = 0; a <= m.rank(); ++a) members.push_back(Monomial({a}));
  } else {
    throw Error(ErrorCode::kInvalidParameters,
                "trivial witnesses cover rank or corank at most 1");
  }
  return CertifyMembers(std::move(members), h, "trivial");
}

std::optional<WitnessCertificate> ConstructWitness(const Matroid& m) {
  const HVector target = HVectorOf(m);
  const Matroid core = ContractColoops(DeleteLoops(m));
  std::optional<WitnessCertificate> cert;
  if (core.rank() <= 1 || core.corank() <= 1) {
    cert = TrivialWitness(core);
  } else if (core.rank() == 2) {
    cert = RankTwoWitness(ParallelismClasses(core).sizes());
  } else if (core.corank() == 2) {
    cert = CorankTwoWitnessOfDual(core);
  } else if (core.rank() == 3) {
    cert = RankThreeWitnessOf(core).certificate;
  }
  if (cert) {
    cert->target = target;
    cert->matches_target = cert->sequence.Matches(target);
  }
  return cert;
}

}  // namespace stanley
