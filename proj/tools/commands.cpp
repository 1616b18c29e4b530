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
#include "commands.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <numeric>
#include <ostream>
#include <random>
#include <vector>

#include "CLI11.hpp"
#include "stanley/enumerate.hpp"
#include "stanley/errors.hpp"
#include "stanley/hvector.hpp"
#include "stanley/matroid_io.hpp"
#include "stanley/multicomplex.hpp"
#include "stanley/verify.hpp"
#include "stanley/witnesses.hpp"

namespace stanley::cli {
namespace {

int ExitCodeFor(const Error& e) {
  return e.code() == ErrorCode::kInternalMismatch ||
                 e.code() == ErrorCode::kSandwichViolated
             ? kExitFailure
             : kExitUsage;
}

// Runs body, mapping library errors onto exit codes.
template <typename Body>
int Guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return ExitCodeFor(e);
  }
}

struct GeneratorLine {
  std::string name;
  std::optional<GeneratorSet> generators;
  std::string note;
};

// "<name> [(h ...)] [[...]] [provenance]" or "<name> [(h ...)] Failed ..."
GeneratorLine ParseGeneratorLine(const std::string& line, int number) {
  auto fail = [&](const std::string& message) -> Error {
    return Error(ErrorCode::kParseError,
                 "generators line " + std::to_string(number) + ": " + message);
  };
  std::size_t pos = line.find_first_not_of(" \t");
  std::size_t end = line.find_first_of(" \t", pos);
  GeneratorLine out;
  out.name = line.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
  pos = end == std::string::npos ? line.size() : line.find_first_not_of(" \t", end);
  if (pos == std::string::npos) throw fail("missing generators");
  if (line[pos] == '(') {
    const std::size_t close = line.find(')', pos);
    if (close == std::string::npos) throw fail("unbalanced '('");
    pos = line.find_first_not_of(" \t", close + 1);
    if (pos == std::string::npos) throw fail("missing generators");
  }
  if (line[pos] != '[') {
    out.note = line.substr(pos);
    return out;
  }
  int depth = 0;
  std::size_t stop = pos;
  for (; stop < line.size(); ++stop) {
    if (line[stop] == '[') ++depth;
    if (line[stop] == ']' && --depth == 0) break;
  }
  if (depth != 0) throw fail("unbalanced '['");
  out.generators = GeneratorSet::Parse(line.substr(pos, stop - pos + 1));
  return out;
}

std::string StatusWord(const WitnessResult& result) {
  return result.reason.empty() ? "unknown" : result.reason;
}

}  // namespace

std::uint64_t ResolveSeed(std::optional<std::uint64_t> flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("STANLEY_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw Error(ErrorCode::kParseError,
                  std::string("STANLEY_SEED is not an integer: ") + env);
    }
  }
  return SearchParams{}.seed;
}

int RunHvec(const std::filesystem::path& file, std::uint64_t seed,
            std::ostream& out, std::ostream& err) {
  return Guarded(err, [&] {
    std::mt19937_64 rng(seed);
    for (const NamedMatroid& record : ReadMatroidFile(file)) {
      const Matroid& m = record.matroid;
      const HVector h = HVectorOf(m);
      std::vector<int> shuffled(m.size());
      std::iota(shuffled.begin(), shuffled.end(), 0);
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      for (const GroundOrdering& order :
           {GroundOrdering::Natural(m.size()), GroundOrdering::FromSequence(shuffled)}) {
        const HVector internal = HViaInternalPassivity(m, order);
        const HVector external = HViaExternalPassivity(m, order);
        if (internal != h || external != h) {
          throw Error(ErrorCode::kInternalMismatch,
                      record.name + ": f-vector " + h.ToString() +
                          ", internal " + internal.ToString() + ", external " +
                          external.ToString());
        }
      }
      out << record.name << ' ' << m.rank() << ' ' << m.corank() << ' '
          << h.ToString() << '\n';
    }
    return kExitOk;
  });
}

int RunOseq(const std::string& literal, std::ostream& out, std::ostream& err) {
  return Guarded(err, [&] {
    const GeneratorSet gens = GeneratorSet::Parse(literal);
    out << OSequenceOf(gens).ToString() << ' '
        << (IsPure(gens) ? "pure" : "not-pure") << '\n';
    return kExitOk;
  });
}

int RunWitness(const std::filesystem::path& file, bool search_fallback,
               const SearchParams& params, std::ostream& out, std::ostream& err) {
  return Guarded(err, [&] {
    int code = kExitOk;
    for (const NamedMatroid& record : ReadMatroidFile(file)) {
      const HVector h = HVectorOf(record.matroid);
      const WitnessResult result = WitnessMatroid(record.matroid, params, search_fallback);
      out << record.name << ' ' << h.ToString() << ' ';
      if (result.ok()) {
        out << result.certificate->generators.ToString() << ' '
            << result.certificate->method << '\n';
      } else {
        out << "Failed " << StatusWord(result) << '\n';
        code = kExitFailure;
      }
    }
    return code;
  });
}

int RunSearch(const std::string& target, const SearchParams& params,
              std::ostream& out, std::ostream& err) {
  return Guarded(err, [&] {
    const SearchOutcome outcome = Anneal(HVector::Parse(target), params);
    if (outcome.found()) {
      out << "Found " << outcome.certificate->generators.ToString()
          << " evaluations=" << outcome.evaluations << '\n';
      return kExitOk;
    }
    out << "Exhausted best_distance="
        << (outcome.best_distance ? std::to_string(*outcome.best_distance) : "-")
        << " evaluations=" << outcome.evaluations << " reason=" << outcome.reason
        << '\n';
    return kExitFailure;
  });
}

int RunVerify(const VerifyFlags& flags, std::ostream& out, std::ostream& err) {
  return Guarded(err, [&] {
    ResultCache cache;
    if (flags.cache) cache = ResultCache::Load(*flags.cache, err);
    VerifyOptions options;
    options.n_max = flags.n_max;
    options.cap = flags.extended ? kHardEnumerationCap : kDefaultEnumerationCap;
    options.search = flags.search;
    const VerificationReport report = RunVerification(options, cache);
    out << report.ToTable();
    if (flags.tsv) {
      std::ofstream tsv(*flags.tsv);
      if (!tsv) {
        throw Error(ErrorCode::kInvalidArgument, "cannot write " + flags.tsv->string());
      }
      tsv << report.ToTsv();
    }
    if (flags.cache) cache.Save(*flags.cache);
    return report.ok() ? kExitOk : kExitFailure;
  });
}

int RunEnumerate(int n, std::optional<int> rank, bool extended,
                 std::ostream& out, std::ostream& err) {
  return Guarded(err, [&] {
    const int cap = extended ? kHardEnumerationCap : kDefaultEnumerationCap;
    std::map<int, int> counters;
    ForEachMatroid(n, rank, [&](const Matroid& m) {
      const int index = ++counters[m.rank()];
      std::string label = std::to_string(index);
      label.insert(0, label.size() < 5 ? 5 - label.size() : 0, '0');
      WriteMatroid(out, {"n" + std::to_string(n) + "_r" + std::to_string(m.rank()) +
                             "_" + label,
                         m});
    }, cap);
    return kExitOk;
  });
}

int RunCheck(const std::filesystem::path& matroids,
             const std::filesystem::path& generators, std::ostream& out,
             std::ostream& err) {
  return Guarded(err, [&] {
    std::map<std::string, Matroid> by_name;
    for (NamedMatroid& record : ReadMatroidFile(matroids)) {
      by_name.insert_or_assign(record.name, std::move(record.matroid));
    }
    std::ifstream in(generators);
    if (!in) throw Error(ErrorCode::kParseError, "cannot open " + generators.string());
    int code = kExitOk;
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
      ++number;
      if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      const GeneratorLine entry = ParseGeneratorLine(line, number);
      auto it = by_name.find(entry.name);
      if (it == by_name.end()) {
        throw Error(ErrorCode::kNameMismatch,
                    "no matroid named '" + entry.name + "' in " + matroids.string());
      }
      if (!entry.generators) {
        out << entry.name << " fail no generators (" << entry.note << ")\n";
        code = kExitFailure;
        continue;
      }
      const HVector h = HVectorOf(ContractColoops(DeleteLoops(it->second)));
      const WitnessCertificate cert = CertifyGenerators(*entry.generators, h, "check");
      if (cert.valid()) {
        out << entry.name << " pass\n";
        continue;
      }
      code = kExitFailure;
      out << entry.name << " fail";
      if (!cert.is_order_ideal) out << " not-an-order-ideal";
      if (!cert.is_pure) out << " not-pure";
      if (!cert.matches_target) {
        out << " F=" << cert.sequence.ToString() << " h=" << h.ToString();
      }
      out << '\n';
    }
    return code;
  });
}

int Main(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Matroid h-vectors and pure O-sequence witnesses"};
  app.require_subcommand(1);

  std::optional<std::uint64_t> seed;
  SearchParams params;
  auto add_search_flags = [&](CLI::App* cmd) {
    cmd->add_option("--seed", seed, "RNG seed (overrides STANLEY_SEED)");
    cmd->add_option("--budget", params.budget, "Candidate evaluations")
        ->capture_default_str();
    cmd->add_option("--restarts", params.restarts, "Annealing restarts")
        ->capture_default_str();
    cmd->add_option("--temperature", params.initial_temperature,
                    "Initial temperature")->capture_default_str();
    cmd->add_option("--decay", params.decay, "Cooling factor per level")
        ->capture_default_str();
    cmd->add_option("--steps-per-level", params.steps_per_level,
                    "Proposals per temperature level")->capture_default_str();
  };

  std::string file;
  auto* hvec = app.add_subcommand("hvec", "Print h-vectors (three methods cross-checked)");
  hvec->add_option("file", file, "Matroid file")->required();
  hvec->add_option("--seed", seed, "Seed for the shuffled ordering");

  std::string literal;
  auto* oseq = app.add_subcommand("oseq", "O-sequence and purity of a generator set");
  oseq->add_option("generators", literal, "e.g. [[0,0,0,5],[0,0,2,3],[1,3,0,1]]")
      ->required();

  bool search_fallback = false;
  auto* witness = app.add_subcommand("witness", "Construct pure order ideal witnesses");
  witness->add_option("file", file, "Matroid file")->required();
  witness->add_flag("--search-fallback", search_fallback,
                    "Search when no construction applies");
  add_search_flags(witness);

  std::string target;
  auto* search = app.add_subcommand("search", "Anneal for a witness of a target h-vector");
  search->add_option("--target", target, "e.g. 1,5,15,27,22")->required();
  add_search_flags(search);

  VerifyFlags verify_flags;
  std::string cache_path, tsv_path;
  auto* verify = app.add_subcommand("verify", "Witness every h-vector of small matroids");
  verify->add_option("--n-max", verify_flags.n_max, "Largest ground set")->required();
  verify->add_flag("--extended", verify_flags.extended, "Allow n-max up to 7");
  verify->add_option("--cache", cache_path, "Result cache file");
  verify->add_option("--tsv", tsv_path, "Write the report as TSV");
  add_search_flags(verify);

  int enum_n = 0;
  std::optional<int> enum_rank;
  bool enum_extended = false;
  auto* enumerate = app.add_subcommand("enumerate", "List labelled loopless matroids");
  enumerate->add_option("--n", enum_n, "Ground set size")->required();
  enumerate->add_option("--rank", enum_rank, "Rank (default: all)");
  enumerate->add_flag("--extended", enum_extended, "Allow n up to 7");

  std::string matroid_file, generators_file;
  auto* check = app.add_subcommand("check", "Validate witnesses against matroids");
  check->add_option("matroids", matroid_file, "Matroid file")->required();
  check->add_option("generators", generators_file, "Witness lines")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    params.seed = ResolveSeed(seed);
    if (*hvec) return RunHvec(file, params.seed, out, err);
    if (*oseq) return RunOseq(literal, out, err);
    if (*witness) {
      params.Validate();
      return RunWitness(file, search_fallback, params, out, err);
    }
    if (*search) {
      params.Validate();
      return RunSearch(target, params, out, err);
    }
    if (*verify) {
      params.Validate();
      verify_flags.search = params;
      if (!cache_path.empty()) verify_flags.cache = cache_path;
      if (!tsv_path.empty()) verify_flags.tsv = tsv_path;
      return RunVerify(verify_flags, out, err);
    }
    if (*enumerate) return RunEnumerate(enum_n, enum_rank, enum_extended, out, err);
    if (*check) return RunCheck(matroid_file, generators_file, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return ExitCodeFor(e);
  }
  return kExitUsage;
}

}  // namespace stanley::cli
