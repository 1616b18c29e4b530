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
#include "stanley/matroid_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

#include "stanley/errors.hpp"

namespace stanley {
namespace {

[[noreturn]] void Fail(int line, const std::string& message) {
  throw Error(ErrorCode::kParseError,
              "line " + std::to_string(line) + ": " + message);
}

int ParseInt(const std::string& token, int line) {
  int value = 0;
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    Fail(line, "expected an integer, got '" + token + "'");
  }
  return value;
}

ElementSet ParseBasis(const std::string& token, int line) {
  if (token == "-") return ElementSet();
  std::vector<int> elements;
  std::stringstream parts(token);
  std::string part;
  while (std::getline(parts, part, ',')) {
    if (part.empty()) Fail(line, "empty element in basis '" + token + "'");
    const int e = ParseInt(part, line);
    if (e < 0 || e >= kMaxGroundSize) {
      Fail(line, "element " + part + " out of range");
    }
    elements.push_back(e);
  }
  return ElementSet::Of(elements);
}

struct PendingRecord {
  std::string name;
  int start_line = 0;
  std::optional<int> n;
  std::optional<int> rank;
  std::vector<ElementSet> bases;
  bool saw_bases = false;
};

NamedMatroid Finish(const PendingRecord& record, int line) {
  if (!record.n) Fail(line, "record '" + record.name + "' has no 'n' line");
  if (!record.saw_bases) {
    Fail(line, "record '" + record.name + "' has no 'bases' line");
  }
  std::vector<ElementSet> bases = record.bases;
  // A bare 'bases' line denotes the single empty basis.
  if (bases.empty()) bases.push_back(ElementSet());
  for (ElementSet b : bases) {
    if (!b.IsSubsetOf(ElementSet::Full(*record.n))) {
      Fail(line, "basis {" + b.ToString() + "} exceeds n=" +
                     std::to_string(*record.n));
    }
  }
  Matroid m = Matroid::FromBases(*record.n, std::move(bases));
  if (record.rank && *record.rank != m.rank()) {
    Fail(line, "record '" + record.name + "' declares rank " +
                   std::to_string(*record.rank) + " but its bases have size " +
                   std::to_string(m.rank()));
  }
  return {record.name, std::move(m)};
}

}  // namespace

std::vector<NamedMatroid> ParseMatroids(std::istream& in) {
  std::vector<NamedMatroid> out;
  std::optional<PendingRecord> current;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::istringstream tokens(raw);
    std::string key;
    if (!(tokens >> key)) continue;
    std::vector<std::string> args;
    for (std::string t; tokens >> t;) args.push_back(t);

    if (key == "matroid") {
      if (current) Fail(line, "'matroid' before 'end' of '" + current->name + "'");
      if (args.size() != 1) Fail(line, "expected 'matroid <name>'");
      current.emplace();
      current->name = args[0];
      current->start_line = line;
      continue;
    }
    if (!current) Fail(line, "'" + key + "' outside a matroid record");
    if (key == "n" || key == "rank") {
      if (args.size() != 1) Fail(line, "expected '" + key + " <int>'");
      const int value = ParseInt(args[0], line);
      if (value < 0 || value > kMaxGroundSize) {
        Fail(line, key + " out of range");
      }
      (key == "n" ? current->n : current->rank) = value;
    } else if (key == "bases") {
      current->saw_bases = true;
      for (const std::string& t : args) {
        current->bases.push_back(ParseBasis(t, line));
      }
    } else if (key == "end") {
      if (!args.empty()) Fail(line, "unexpected tokens after 'end'");
      out.push_back(Finish(*current, line));
      current.reset();
    } else {
      Fail(line, "unknown keyword '" + key + "'");
    }
  }
  if (current) {
    Fail(line, "record '" + current->name + "' is missing 'end'");
  }
  return out;
}

std::vector<NamedMatroid> ReadMatroidFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kParseError, "cannot open " + path.string());
  }
  return ParseMatroids(in);
}

void WriteMatroid(std::ostream& out, const NamedMatroid& record) {
  const Matroid& m = record.matroid;
  out << "matroid " << record.name << '\n'
      << "n " << m.size() << '\n'
      << "rank " << m.rank() << '\n'
      << "bases";
  for (ElementSet b : m.bases()) out << ' ' << b.ToString();
  out << "\nend\n";
}

}  // namespace stanley
