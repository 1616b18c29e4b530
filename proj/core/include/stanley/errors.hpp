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

#ifndef STANLEY_ERRORS_HPP_
#define STANLEY_ERRORS_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace stanley {

enum class ErrorCode {
  kInvalidArgument,
  kMixedCardinality,
  kExchangeViolation,
  kHasLoops,
  kCapExceeded,
  kNotRankTwo,
  kNotRankThree,
  kInvalidParameters,
  kSandwichViolated,
  kTooMany,
  kParseError,
  kInternalMismatch,
  kNameMismatch,
};

std::string_view ErrorCodeName(ErrorCode code);

// All recoverable failures in the library are reported through this type.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace stanley

#endif  // STANLEY_ERRORS_HPP_
