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
#include "stanley/verify.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <tuple>

#include "stanley/errors.hpp"

namespace stanley {
namespace {

bool IsSearchProvenance(const std::string& provenance) {
  return provenance.rfind("search", 0) == 0;
}

}  // namespace

WitnessResult WitnessMatroid(const Matroid& m, const SearchParams& params,
                             bool search_fallback) {
  WitnessResult out;
  out.certificate = ConstructWitness(m);
  if (out.certificate) {
    if (!out.certificate->valid()) out.reason = "construction failed to certify";
    return out;
  }
  if (!search_fallback) {
    out.reason = "no construction covers rank " + std::to_string(m.rank()) +
                 ", corank " + std::to_string(m.corank());
    return out;
  }
  out.by_search = true;
  SearchOutcome outcome = Anneal(HVectorOf(m), params);
  if (outcome.found()) {
    out.certificate = std::move(outcome.certificate);
  } else {
    out.reason = "search exhausted: " + outcome.reason;
  }
  return out;
}

ResultCache ResultCache::Load(const std::filesystem::path& path,
                              std::ostream& warnings) {
  ResultCache cache;
  std::ifstream in(path);
  if (!in) return cache;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream parts(line);
    for (std::string f; std::getline(parts, f, '\t');) fields.push_back(f);
    try {
      if (fields.size() != 3) {
        throw Error(ErrorCode::kParseError, "expected 3 tab-separated fields");
      }
      const HVector h = HVector::Parse(fields[0]).Trimmed();
      GeneratorSet gens = GeneratorSet::Parse(fields[1]);
      const WitnessCertificate cert = CertifyGenerators(gens, h, fields[2]);
      if (!cert.valid()) {
        throw Error(ErrorCode::kInternalMismatch, "witness does not re-validate");
      }
      cache.Insert(h, {std::move(gens), fields[2]});
    } catch (const Error& e) {
      warnings << "warning: " << path.string() << ":" << number
               << ": ignoring cache line: " << e.what() << '\n';
    }
  }
  return cache;
}

void ResultCache::Save(const std::filesystem::path& path) const {
  std::ofstream out(path);
  if (!out) {
    throw Error(ErrorCode::kInvalidArgument, "cannot write " + path.string());
  }
  for (const auto& [h, entry] : entries_) {
    out << h.ToString() << '\t' << entry.generators.ToString() << '\t'
        << entry.provenance << '\n';
  }
}

const ResultCache::Entry* ResultCache::Find(const HVector& h) const {
  auto it = entries_.find(h.Trimmed());
  return it == entries_.end() ? nullptr : &it->second;
}

void ResultCache::Insert(const HVector& h, Entry entry) {
  entries_.insert_or_assign(h.Trimmed(), std::move(entry));
}

const VerificationRow* VerificationReport::Find(int rank, int corank) const {
  for (const VerificationRow& row : rows) {
    if (row.rank == rank && row.corank == corank) return &row;
  }
  return nullptr;
}

std::string VerificationReport::ToTsv() const {
  std::ostringstream out;
  out << "rank\tcorank\tmatroids\tdistinct_h\twitnessed\tby_construction\t"
         "by_search\tfailed\n";
  for (const VerificationRow& r : rows) {
    out << r.rank << '\t' << r.corank << '\t' << r.matroids << '\t'
        << r.distinct_h << '\t' << r.witnessed << '\t' << r.by_construction
        << '\t' << r.by_search << '\t' << r.failed << '\n';
  }
  return out.str();
}

std::string VerificationReport::ToTable() const {
  std::ostringstream out;
  const char* headers[] = {"rank", "corank", "matroids", "distinct_h",
                           "witnessed", "by_construction", "by_search", "failed"};
  for (const char* h : headers) out << std::setw(16) << h;
  out << '\n';
  for (const VerificationRow& r : rows) {
    out << std::setw(16) << r.rank << std::setw(16) << r.corank
        << std::setw(16) << r.matroids << std::setw(16) << r.distinct_h
        << std::setw(16) << r.witnessed << std::setw(16) << r.by_construction
        << std::setw(16) << r.by_search << std::setw(16) << r.failed << '\n';
  }
  for (const VerificationFailure& f : failures) {
    out << "FAILED rank " << f.rank << " corank " << f.corank << ' '
        << f.h.ToString() << ": " << f.reason << '\n';
  }
  return out.str();
}

VerificationReport RunVerification(const VerifyOptions& options,
                                   ResultCache& cache) {
  if (options.n_max < 0 || options.n_max > options.cap) {
    throw Error(ErrorCode::kCapExceeded,
                "n-max " + std::to_string(options.n_max) +
                    " exceeds enumeration cap " + std::to_string(options.cap));
  }
  VerificationReport report;
  for (int n = 0; n <= options.n_max; ++n) {
    for (int r = 0; r <= n; ++r) {
      VerificationRow row;
      row.rank = r;
      row.corank = n - r;
      // First matroid (in enumeration order) realising each h-vector.
      std::map<HVector, Matroid> representative;
      ForEachMatroid(n, r, [&](const Matroid& m) {
        ++row.matroids;
        representative.try_emplace(HVectorOf(m), m);
      }, options.cap);
      if (row.matroids == 0) continue;
      row.distinct_h = representative.size();

      for (const auto& [h, m] : representative) {
        row.h_vectors.push_back(h);
        std::string provenance;
        if (const ResultCache::Entry* hit = cache.Find(h)) {
          provenance = hit->provenance;
        } else {
          const WitnessResult result =
              WitnessMatroid(m, options.search, options.search_fallback);
          if (result.by_search) ++report.search_invocations;
          if (!result.ok()) {
            ++row.failed;
            report.failures.push_back({r, n - r, h, result.reason});
            continue;
          }
          provenance = result.certificate->method;
          cache.Insert(h, {result.certificate->generators, provenance});
        }
        ++row.witnessed;
        if (IsSearchProvenance(provenance)) {
          ++row.by_search;
        } else {
          ++row.by_construction;
        }
      }
      report.rows.push_back(std::move(row));
    }
  }
  std::sort(report.rows.begin(), report.rows.end(),
            [](const VerificationRow& a, const VerificationRow& b) {
              return std::tie(a.rank, a.corank) < std::tie(b.rank, b.corank);
            });
  return report;
}

}  // namespace stanley
