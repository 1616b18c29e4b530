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
#include "stanley/errors.hpp"

namespace stanley {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kMixedCardinality: return "MixedCardinality";
    case ErrorCode::kExchangeViolation: return "ExchangeViolation";
    case ErrorCode::kHasLoops: return "HasLoops";
    case ErrorCode::kCapExceeded: return "CapExceeded";
    case ErrorCode::kNotRankTwo: return "NotRankTwo";
    case ErrorCode::kNotRankThree: return "NotRankThree";
    case ErrorCode::kInvalidParameters: return "InvalidParameters";
    case ErrorCode::kSandwichViolated: return "SandwichViolated";
    case ErrorCode::kTooMany: return "TooMany";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kInternalMismatch: return "InternalMismatch";
    case ErrorCode::kNameMismatch: return "NameMismatch";
  }
  return "Unknown";
}

}  // namespace stanley
