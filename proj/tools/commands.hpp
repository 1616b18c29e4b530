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
#ifndef STANLEY_TOOLS_COMMANDS_HPP_
#define STANLEY_TOOLS_COMMANDS_HPP_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "stanley/search.hpp"

namespace stanley::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

// Seed from the flag if given, else STANLEY_SEED, else the default.
std::uint64_t ResolveSeed(std::optional<std::uint64_t> flag);

int RunHvec(const std::filesystem::path& file, std::uint64_t seed,
            std::ostream& out, std::ostream& err);
int RunOseq(const std::string& literal, std::ostream& out, std::ostream& err);
int RunWitness(const std::filesystem::path& file, bool search_fallback,
               const SearchParams& params, std::ostream& out, std::ostream& err);
int RunSearch(const std::string& target, const SearchParams& params,
              std::ostream& out, std::ostream& err);

struct VerifyFlags {
  int n_max = 0;
  bool extended = false;  // raise the enumeration cap to 7
  std::optional<std::filesystem::path> cache;
  std::optional<std::filesystem::path> tsv;
  SearchParams search;
};
int RunVerify(const VerifyFlags& flags, std::ostream& out, std::ostream& err);

int RunEnumerate(int n, std::optional<int> rank, bool extended,
                 std::ostream& out, std::ostream& err);
int RunCheck(const std::filesystem::path& matroids,
             const std::filesystem::path& generators, std::ostream& out,
             std::ostream& err);

// Parses argv and dispatches to one of the commands above.
int Main(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace stanley::cli

#endif  // STANLEY_TOOLS_COMMANDS_HPP_
