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
#ifndef STANLEY_MATROID_IO_HPP_
#define STANLEY_MATROID_IO_HPP_

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "stanley/matroid.hpp"

namespace stanley {

// Text format, one record per matroid:
//
//   matroid U24
//   n 4
//   rank 2
//   bases 0,1 0,2 0,3 1,2 1,3 2,3
//   end
//
// Blank lines and '#' comments are ignored and several records may share one
// file. 'bases' may repeat; its tokens accumulate. The empty basis of a rank-0
// matroid is written '-'. Malformed input throws kParseError with the line
// number; invalid basis families throw the Matroid::FromBases errors.
std::vector<NamedMatroid> ParseMatroids(std::istream& in);
std::vector<NamedMatroid> ReadMatroidFile(const std::filesystem::path& path);

void WriteMatroid(std::ostream& out, const NamedMatroid& record);

}  // namespace stanley

#endif  // STANLEY_MATROID_IO_HPP_
