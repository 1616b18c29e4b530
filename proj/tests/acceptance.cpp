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
// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "stanley/catalog.hpp"
#include "stanley/enumerate.hpp"
#include "stanley/hvector.hpp"
#include "stanley/search.hpp"
#include "stanley/verify.hpp"
#include "stanley/witnesses.hpp"

namespace stanley {
namespace {

struct Outcome {
  bool passed = false;
  std::string detail;
};

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
};

CliRun RunCli(std::vector<std::string> args) {
  args.insert(args.begin(), "stanley");
  std::vector<char*> argv;
  for (std::string& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  CliRun run;
  run.code = cli::Main(static_cast<int>(argv.size()), argv.data(), out, err);
  run.out = out.str();
  run.err = err.str();
  return run;
}

std::vector<Matroid> AllMatroidsUpTo(int n_max) {
  std::vector<Matroid> out;
  for (int n = 0; n <= n_max; ++n) {
    ForEachMatroid(n, std::nullopt, [&](const Matroid& m) { out.push_back(m); });
  }
  return out;
}

Outcome BoxyExample() {
  const CliRun run = RunCli({"oseq", "[[0,0,0,5],[0,0,2,3],[1,3,0,1]]"});
  if (run.code != 0 || run.out != "(1 4 7 7 6 3) pure\n") {
    return {false, "got '" + run.out + "' exit " + std::to_string(run.code)};
  }
  return {true, "(1 4 7 7 6 3) pure"};
}

Outcome PublishedSearchTargets() {
  std::vector<std::string> found;
  for (const std::string target : {"1,5,15,27,22", "1,5,15,27,35"}) {
    const auto start = std::chrono::steady_clock::now();
    const CliRun first = RunCli({"search", "--target", target});
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const CliRun second = RunCli({"search", "--target", target});
    if (first.code != 0 || first.out.rfind("Found ", 0) != 0) {
      return {false, target + ": " + first.out};
    }
    if (first.out != second.out) return {false, target + ": not deterministic"};
    const std::string literal =
        first.out.substr(6, first.out.find(" evaluations=") - 6);
    const WitnessCertificate cert = CertifyGenerators(
        GeneratorSet::Parse(literal), HVector::Parse(target), "recheck");
    if (!cert.valid()) return {false, target + ": certificate does not re-validate"};
    if (seconds >= 60) return {false, target + " took " + std::to_string(seconds) + "s"};
    std::string evaluations = first.out.substr(first.out.find("evaluations="));
    evaluations.pop_back();
    found.push_back("(" + target + ") " + evaluations);
  }
  return {true, found[0] + ", " + found[1]};
}

Outcome RankTwoRow(const VerificationReport& report) {
  const int expected[] = {4, 6, 8};
  std::string detail;
  bool ok = true;
  for (int corank = 2; corank <= 4; ++corank) {
    const VerificationRow* row = report.Find(2, corank);
    const std::uint64_t got = row ? row->distinct_h : 0;
    ok = ok && got == static_cast<std::uint64_t>(expected[corank - 2]);
    if (!detail.empty()) detail += ", ";
    detail += "corank " + std::to_string(corank) + ": " + std::to_string(got);
  }
  return {ok, detail};
}

Outcome ThreeWayAgreement() {
  std::mt19937_64 rng(0x5eed);
  std::uint64_t checks = 0;
  for (const Matroid& m : AllMatroidsUpTo(6)) {
    const HVector h = HFromF(FVectorOf(m), m.rank());
    std::vector<int> order(m.size());
    std::iota(order.begin(), order.end(), 0);
    for (int trial = 0; trial < 50; ++trial) {
      std::shuffle(order.begin(), order.end(), rng);
      const GroundOrdering o = GroundOrdering::FromSequence(order);
      if (HViaInternalPassivity(m, o) != h || HViaExternalPassivity(m, o) != h) {
        return {false, "disagreement at h = " + h.ToString()};
      }
      ++checks;
    }
  }
  return {true, std::to_string(checks) + " matroid/ordering pairs"};
}

void Partitions(int n, int max_part, std::vector<int>& prefix,
                std::vector<std::vector<int>>& out) {
  if (n == 0) {
    if (prefix.size() >= 2) out.push_back(prefix);
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    prefix.push_back(p);
    Partitions(n - p, p, prefix, out);
    prefix.pop_back();
  }
}

Outcome ConstructionSweeps() {
  std::vector<std::vector<int>> sizes;
  for (int n = 2; n <= 9; ++n) {
    std::vector<int> prefix;
    Partitions(n, n, prefix, sizes);
  }
  std::uint64_t rank2 = 0, corank2 = 0, rank3 = 0;
  for (const auto& s : sizes) {
    const Matroid m = RankTwoFromClassSizes(s);
    const WitnessCertificate a = RankTwoWitness(s);
    if (!a.valid() || !a.sequence.Matches(HVectorOf(m))) {
      return {false, "rank-2 witness failed for sizes of n=" + std::to_string(m.size())};
    }
    ++rank2;
    const WitnessCertificate b = CorankTwoWitness(m);
    if (!b.valid() || !b.sequence.Matches(HVectorOf(Dual(m)))) {
      return {false, "corank-2 witness failed on n=" + std::to_string(m.size())};
    }
    ++corank2;
  }
  std::vector<Matroid> rank_three;
  for (int n = 3; n <= 6; ++n) {
    for (Matroid& m : EnumerateMatroids(n, 3)) rank_three.push_back(std::move(m));
  }
  rank_three.push_back(Fano());
  for (const Matroid& m : rank_three) {
    const RankThreeWitness w = RankThreeWitnessOf(m);
    if (!w.certificate.valid() || !w.certificate.sequence.Matches(HVectorOf(m))) {
      return {false, "rank-3 witness failed for h = " + HVectorOf(m).ToString()};
    }
    ++rank3;
  }
  const RankThreeWitness fano = RankThreeWitnessOf(Fano());
  if (HVectorOf(Fano()).ToString() != "(1 4 10 13)" || fano.lower_h3 != 7 ||
      fano.upper_h3 != 20) {
    return {false, "Fano bounds differ from 7 <= 13 <= 20"};
  }
  return {true, std::to_string(rank2) + " rank-2, " + std::to_string(corank2) +
                    " corank-2, " + std::to_string(rank3) + " rank-3 certificates"};
}

Outcome FullVerification() {
  const CliRun run = RunCli({"verify", "--n-max", "6"});
  if (run.code != 0 || run.out.find("FAILED") != std::string::npos) {
    return {false, "exit " + std::to_string(run.code) + "\n" + run.out + run.err};
  }
  return {true, "zero failures"};
}

Outcome OracleAgreement() {
  std::uint64_t targets = 0, feasible = 0;
  for (int h1 = 1; h1 <= 3; ++h1) {
    for (int d = 1; d <= 3; ++d) {
      // Odometer over h_2..h_d within the monomial counts.
      std::vector<int> h(d + 1, 1);
      h[1] = h1;
      std::vector<int> limit(d + 1, 1);
      for (int i = 1; i <= d; ++i) {
        limit[i] = static_cast<int>(MonomialCount(h1, i));
      }
      limit[1] = h1;
      limit[d] = std::min(limit[d], 4);
      while (true) {
        HVector target;
        for (int v : h) target.entries.emplace_back(v);
        if (StructuralChecks(target).passed()) {
          ++targets;
          const bool exhaustive = ExhaustiveSearch(target).found();
          const bool anneal = Anneal(target, SearchParams{}).found();
          if (exhaustive != anneal) {
            return {false, target.ToString() + ": exhaustive " +
                               (exhaustive ? "found" : "none") + ", anneal " +
                               (anneal ? "found" : "none")};
          }
          feasible += exhaustive;
        }
        int i = 2;
        while (i <= d && ++h[i] > limit[i]) h[i++] = 1;
        if (i > d) break;
      }
    }
  }
  return {true, std::to_string(targets) + " targets, " + std::to_string(feasible) +
                    " pure O-sequences"};
}

Outcome BrownColbournRefutation(const VerificationReport& report) {
  HVector bad;
  for (int v : {1, 5, 2}) bad.entries.emplace_back(v);
  const StructuralReport r = StructuralChecks(bad);
  if (r.passed() || !r.brown_colbourn_failure || r.brown_colbourn_failure->s != 2 ||
      r.brown_colbourn_failure->alpha != 1 || r.brown_colbourn_failure->value != -2) {
    return {false, "(1 5 2) not rejected at s=2, alpha=1 with value -2"};
  }
  std::uint64_t accepted = 0;
  for (const VerificationRow& row : report.rows) {
    for (const HVector& h : row.h_vectors) {
      if (!StructuralChecks(h).passed()) {
        return {false, h.ToString() + " rejected: " + StructuralChecks(h).Summary()};
      }
      ++accepted;
    }
  }
  return {true, "(1 5 2) rejected; " + std::to_string(accepted) + " h-vectors accepted"};
}

Outcome ColoopConvention() {
  std::uint64_t checked = 0;
  for (const Matroid& m : AllMatroidsUpTo(6)) {
    const int j = Coloops(m).size();
    if (j == 0) continue;
    HVector padded = HVectorOf(ContractColoops(m));
    padded.entries.resize(padded.entries.size() + j, 0);
    if (HVectorOf(m) != padded) {
      return {false, HVectorOf(m).ToString() + " vs " + padded.ToString()};
    }
    ++checked;
  }
  return {true, std::to_string(checked) + " matroids with coloops"};
}

int RunAll() {
  ResultCache cache;
  VerifyOptions options;
  options.n_max = 6;
  const VerificationReport report = RunVerification(options, cache);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"boxy example", BoxyExample},
      {"published search targets", PublishedSearchTargets},
      {"rank-2 row 4 6 8", [&] { return RankTwoRow(report); }},
      {"three-way h-vector agreement", ThreeWayAgreement},
      {"construction sweeps", ConstructionSweeps},
      {"verify --n-max 6", FullVerification},
      {"anneal vs exhaustive", OracleAgreement},
      {"Brown-Colbourn refutation", [&] { return BrownColbournRefutation(report); }},
      {"coloop convention", ColoopConvention},
  };
  const double limits[] = {1, 120, 10, 600, 600, 600, 120, 600, 600};

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = criteria[i].second();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (outcome.passed && seconds > limits[i]) {
      outcome = {false, "over time limit; " + outcome.detail};
    }
    failures += !outcome.passed;
    std::cout << (outcome.passed ? "PASS" : "FAIL") << " criterion " << i + 1 << " ("
              << criteria[i].first << "): " << outcome.detail << " [" << std::fixed
              << std::setprecision(2) << seconds << "s]\n";
  }
  return failures == 0 ? 0 : 1;
}

}  // namespace
}  // namespace stanley

int main() { return stanley::RunAll(); }
