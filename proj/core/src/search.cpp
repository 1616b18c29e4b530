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
#include "stanley/search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_map>
#include <unordered_set>

#include "stanley/errors.hpp"

namespace stanley {
namespace {

constexpr int kCollisionRetries = 16;
constexpr int kMaxVariables = 64;

std::uint64_t LatticePointCount(int k, int d) {
  const Integer count = MonomialCount(k, d);
  if (count > std::numeric_limits<std::uint64_t>::max()) {
    throw Error(ErrorCode::kTooMany, "simplex too large");
  }
  return static_cast<std::uint64_t>(count);
}

// Reference counts of every divisor of the current generators, with the
// number of distinct divisors per degree.
class DivisorCounter {
 public:
  explicit DivisorCounter(int top_degree) : per_degree_(top_degree + 1, 0) {}

  void Add(const Monomial& g) { Walk(g, +1); }
  void Remove(const Monomial& g) { Walk(g, -1); }
  const std::vector<std::uint64_t>& per_degree() const { return per_degree_; }

 private:
  void Walk(const Monomial& g, int delta) {
    std::vector<int> current(g.arity(), 0);
    while (true) {
      Monomial divisor(current);
      const int degree = divisor.degree();
      if (delta > 0) {
        if (++counts_[divisor] == 1) ++per_degree_[degree];
      } else {
        auto it = counts_.find(divisor);
        if (--it->second == 0) {
          counts_.erase(it);
          --per_degree_[degree];
        }
      }
      int v = 0;
      while (v < g.arity() && current[v] == g[v]) current[v++] = 0;
      if (v == g.arity()) return;
      ++current[v];
    }
  }

  std::unordered_map<Monomial, int, MonomialHash> counts_;
  std::vector<std::uint64_t> per_degree_;
};

std::uint64_t Distance(const std::vector<std::uint64_t>& counts,
                       const std::vector<std::uint64_t>& target) {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < target.size(); ++i) {
    total += counts[i] > target[i] ? counts[i] - target[i] : target[i] - counts[i];
  }
  return total;
}

struct Move {
  std::size_t index;
  Monomial replacement;
};

std::optional<Move> ProposeMove(const std::vector<Monomial>& gens,
                                const std::unordered_set<Monomial, MonomialHash>& present,
                                SearchRng& rng) {
  if (gens.empty() || gens.front().arity() < 2) return std::nullopt;
  const int k = gens.front().arity();
  std::uint64_t total = 0;
  for (const Monomial& g : gens) {
    for (int v = 0; v < k; ++v) total += g[v] > 0 ? k - 1 : 0;
  }
  if (total == 0) return std::nullopt;
  std::uniform_int_distribution<std::uint64_t> pick(0, total - 1);
  for (int attempt = 0; attempt < kCollisionRetries; ++attempt) {
    std::uint64_t r = pick(rng);
    for (std::size_t idx = 0; idx < gens.size(); ++idx) {
      const Monomial& g = gens[idx];
      for (int from = 0; from < k; ++from) {
        if (g[from] == 0) continue;
        if (r >= static_cast<std::uint64_t>(k - 1)) {
          r -= k - 1;
          continue;
        }
        int to = static_cast<int>(r);
        if (to >= from) ++to;
        Monomial next = g.Times(from, -1).Times(to, +1);
        if (present.contains(next)) goto retry;
        return Move{idx, std::move(next)};
      }
    }
  retry:;
  }
  return std::nullopt;
}

std::vector<std::uint64_t> TargetCounts(const HVector& h) {
  std::vector<std::uint64_t> out;
  for (const Integer& e : h.entries) out.push_back(static_cast<std::uint64_t>(e));
  return out;
}

// Validation shared by both searches. Returns a reason when the target
// cannot be searched.
std::optional<std::string> ShapeProblem(const HVector& h) {
  if (h.entries.empty() || h.entries[0] != 1) return "h_0 must be 1";
  for (const Integer& e : h.entries) {
    if (e < 0) return "negative entry";
    if (e > std::numeric_limits<std::uint32_t>::max()) return "entry too large";
  }
  if (h.degree() >= 1 && h.entries[1] > kMaxVariables) {
    return "more than " + std::to_string(kMaxVariables) + " variables";
  }
  return std::nullopt;
}

SearchOutcome FoundOutcome(const std::vector<Monomial>& gens, const HVector& target,
                           std::string method, std::uint64_t evaluations) {
  SearchOutcome out;
  out.status = SearchStatus::kFound;
  out.certificate = CertifyGenerators(GeneratorSet::FromMonomials(gens), target,
                                      std::move(method));
  if (!out.certificate->valid()) {
    throw Error(ErrorCode::kInternalMismatch,
                "search produced an invalid certificate for " + target.ToString());
  }
  out.evaluations = evaluations;
  out.best_distance = 0;
  return out;
}

}  // namespace

void SearchParams::Validate() const {
  if (budget < 1) throw Error(ErrorCode::kInvalidArgument, "budget must be >= 1");
  if (!(decay > 0.0 && decay < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "decay must lie in (0, 1)");
  }
  if (steps_per_level < 1 || restarts < 1 || !(initial_temperature > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "invalid annealing schedule");
  }
}

Monomial UnrankMonomial(int k, int d, std::uint64_t rank) {
  std::vector<int> exponents(k, 0);
  int remaining = d;
  for (int v = 0; v < k - 1; ++v) {
    int a = 0;
    while (true) {
      const std::uint64_t block = LatticePointCount(k - v - 1, remaining - a);
      if (rank < block) break;
      rank -= block;
      ++a;
    }
    exponents[v] = a;
    remaining -= a;
  }
  if (k > 0) exponents[k - 1] = remaining;
  return Monomial(std::move(exponents));
}

GeneratorSet SampleGenerators(int k, int d, std::uint64_t m, SearchRng& rng) {
  if (k < 1 || d < 1 || m < 1) {
    throw Error(ErrorCode::kInvalidArgument, "need k >= 1, d >= 1, m >= 1");
  }
  const std::uint64_t points = LatticePointCount(k, d);
  if (m > points) {
    throw Error(ErrorCode::kTooMany,
                std::to_string(m) + " generators requested from " +
                    std::to_string(points) + " lattice points");
  }
  // Floyd's sampling of an m-subset of ranks.
  std::unordered_set<std::uint64_t> ranks;
  std::vector<std::uint64_t> ordered;
  for (std::uint64_t j = points - m; j < points; ++j) {
    const std::uint64_t r = std::uniform_int_distribution<std::uint64_t>(0, j)(rng);
    const std::uint64_t chosen = ranks.contains(r) ? j : r;
    ranks.insert(chosen);
    ordered.push_back(chosen);
  }
  std::vector<Monomial> gens;
  for (std::uint64_t r : ordered) gens.push_back(UnrankMonomial(k, d, r));
  return GeneratorSet::FromMonomials(std::move(gens));
}

GeneratorSet Mutate(const GeneratorSet& generators, SearchRng& rng) {
  std::vector<Monomial> gens = generators.monomials();
  const std::unordered_set<Monomial, MonomialHash> present(gens.begin(), gens.end());
  std::optional<Move> move = ProposeMove(gens, present, rng);
  if (!move) return generators;
  gens[move->index] = std::move(move->replacement);
  return GeneratorSet::FromMonomials(std::move(gens));
}

SearchOutcome Anneal(const HVector& raw_target, const SearchParams& params) {
  params.Validate();
  SearchOutcome out;
  const HVector target = raw_target.Trimmed();
  if (auto problem = ShapeProblem(target)) {
    out.reason = *problem;
    return out;
  }
  const StructuralReport report = StructuralChecks(target);
  if (!report.passed()) {
    out.reason = "pre-filter " + report.Summary();
    return out;
  }
  const int d = target.degree();
  const std::string method = "search:seed=" + std::to_string(params.seed);
  if (d == 0) return FoundOutcome({Monomial::One(0)}, raw_target, method, 1);

  const int k = static_cast<int>(target.entries[1]);
  const std::uint64_t m = static_cast<std::uint64_t>(target.entries[d]);
  const std::vector<std::uint64_t> goal = TargetCounts(target);

  for (int restart = 0; restart < params.restarts; ++restart) {
    std::uint64_t allowance = params.budget / params.restarts;
    if (static_cast<std::uint64_t>(restart) < params.budget % params.restarts) {
      ++allowance;
    }
    if (allowance == 0) continue;
    std::seed_seq seq{static_cast<std::uint32_t>(params.seed),
                      static_cast<std::uint32_t>(params.seed >> 32),
                      static_cast<std::uint32_t>(restart)};
    SearchRng rng(seq);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    std::vector<Monomial> gens = SampleGenerators(k, d, m, rng).monomials();
    std::unordered_set<Monomial, MonomialHash> present(gens.begin(), gens.end());
    DivisorCounter counter(d);
    for (const Monomial& g : gens) counter.Add(g);
    std::uint64_t used = 1;
    ++out.evaluations;
    std::uint64_t current = Distance(counter.per_degree(), goal);
    out.best_distance = std::min(out.best_distance.value_or(current), current);
    double temperature = params.initial_temperature;
    std::uint64_t steps = 0;

    while (current != 0 && used < allowance) {
      ++used;
      ++out.evaluations;
      if (++steps % params.steps_per_level == 0) temperature *= params.decay;
      std::optional<Move> move = ProposeMove(gens, present, rng);
      if (!move) continue;
      const Monomial old = gens[move->index];
      counter.Remove(old);
      counter.Add(move->replacement);
      const std::uint64_t next = Distance(counter.per_degree(), goal);
      const double delta = static_cast<double>(next) - static_cast<double>(current);
      if (delta <= 0.0 || unit(rng) < std::exp(-delta / temperature)) {
        present.erase(old);
        present.insert(move->replacement);
        gens[move->index] = std::move(move->replacement);
        current = next;
        out.best_distance = std::min(*out.best_distance, current);
      } else {
        counter.Remove(move->replacement);
        counter.Add(old);
      }
    }
    if (current == 0) {
      return FoundOutcome(gens, raw_target, method, out.evaluations);
    }
  }
  out.reason = "budget exhausted";
  return out;
}

SearchOutcome ExhaustiveSearch(const HVector& raw_target, std::uint64_t cap) {
  SearchOutcome out;
  const HVector target = raw_target.Trimmed();
  if (auto problem = ShapeProblem(target)) {
    out.reason = *problem;
    return out;
  }
  const int d = target.degree();
  if (d == 0) return FoundOutcome({Monomial::One(0)}, raw_target, "exhaustive", 1);

  const int k = static_cast<int>(target.entries[1]);
  const std::uint64_t m = static_cast<std::uint64_t>(target.entries[d]);
  const std::vector<Monomial> points = MonomialsOfDegree(k, d);
  const Integer subsets = Binomial(Integer(points.size()), static_cast<int>(m));
  if (subsets > cap) {
    throw Error(ErrorCode::kCapExceeded,
                subsets.str() + " candidate sets exceed cap " + std::to_string(cap));
  }
  const std::vector<std::uint64_t> goal = TargetCounts(target);
  if (subsets == 0) {
    out.reason = "no " + std::to_string(m) + "-subset of " +
                 std::to_string(points.size()) + " lattice points";
    return out;
  }
  std::vector<std::size_t> pick(m);
  for (std::size_t i = 0; i < m; ++i) pick[i] = i;
  const std::size_t n = points.size();
  while (true) {
    std::vector<Monomial> gens;
    for (std::size_t i : pick) gens.push_back(points[i]);
    ++out.evaluations;
    const OSequence seq = OSequenceOf(GeneratorSet::FromMonomials(gens));
    const std::uint64_t distance =
        seq.entries.size() == goal.size() ? Distance(seq.entries, goal)
                                          : std::numeric_limits<std::uint64_t>::max();
    out.best_distance = std::min(out.best_distance.value_or(distance), distance);
    if (distance == 0) {
      return FoundOutcome(gens, raw_target, "exhaustive", out.evaluations);
    }
    std::size_t i = m;
    while (i > 0 && pick[i - 1] == n - m + (i - 1)) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < m; ++j) pick[j] = pick[j - 1] + 1;
  }
  out.reason = "no witness among all " + subsets.str() + " candidate sets";
  return out;
}

}  // namespace stanley
