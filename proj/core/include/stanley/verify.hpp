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
#ifndef STANLEY_VERIFY_HPP_
#define STANLEY_VERIFY_HPP_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stanley/enumerate.hpp"
#include "stanley/hvector.hpp"
#include "stanley/matroid.hpp"
#include "stanley/search.hpp"
#include "stanley/witnesses.hpp"

namespace stanley {

// Witness for one matroid: a construction when one applies, otherwise the
// annealing search on h(m) when allowed.
struct WitnessResult {
  std::optional<WitnessCertificate> certificate;
  bool by_search = false;
  std::string reason;

  bool ok() const { return certificate && certificate->valid(); }
};

WitnessResult WitnessMatroid(const Matroid& m, const SearchParams& params,
                             bool search_fallback);

// Known witnesses keyed by h-vector with trailing zeros removed.
//
// File format, one line per h-vector:
//   (1 2 3)<TAB>[[2,0],[1,1],[0,2]]<TAB>rank2
class ResultCache {
 public:
  struct Entry {
    GeneratorSet generators;
    std::string provenance;
  };

  // A missing file yields an empty cache. Lines that fail to parse or whose
  // witness does not re-validate are skipped with a warning.
  static ResultCache Load(const std::filesystem::path& path,
                          std::ostream& warnings);
  void Save(const std::filesystem::path& path) const;

  const Entry* Find(const HVector& h) const;
  void Insert(const HVector& h, Entry entry);
  std::size_t size() const { return entries_.size(); }
  const std::map<HVector, Entry>& entries() const { return entries_; }

 private:
  std::map<HVector, Entry> entries_;
};

struct VerificationRow {
  int rank = 0;
  int corank = 0;
  std::uint64_t matroids = 0;
  std::uint64_t distinct_h = 0;
  std::uint64_t witnessed = 0;
  std::uint64_t by_construction = 0;
  std::uint64_t by_search = 0;
  std::uint64_t failed = 0;
  // Distinct h-vectors of the cell, sorted.
  std::vector<HVector> h_vectors;
};

struct VerificationFailure {
  int rank = 0;
  int corank = 0;
  HVector h;
  std::string reason;
};

struct VerificationReport {
  std::vector<VerificationRow> rows;  // sorted by (rank, corank)
  std::vector<VerificationFailure> failures;
  // Number of annealing runs started while building the report.
  std::uint64_t search_invocations = 0;

  bool ok() const { return failures.empty(); }
  const VerificationRow* Find(int rank, int corank) const;
  // Columns: rank corank matroids distinct_h witnessed by_construction
  // by_search failed.
  std::string ToTsv() const;
  std::string ToTable() const;
};

struct VerifyOptions {
  int n_max = 0;
  int cap = kDefaultEnumerationCap;
  SearchParams search;
  bool search_fallback = true;
};

// Enumerates every labelled loopless matroid on at most n_max elements,
// groups h-vectors by (rank, corank), and witnesses each distinct h-vector of
// the coloop-contracted matroid (cached witnesses are reused).
VerificationReport RunVerification(const VerifyOptions& options,
                                   ResultCache& cache);

}  // namespace stanley

#endif  // STANLEY_VERIFY_HPP_
