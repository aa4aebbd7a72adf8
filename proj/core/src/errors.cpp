//
// Copyright 2026 The lipfilter Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include "lipfilter/errors.hpp"

namespace lipfilter {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kOutOfDomain: return "OutOfDomain";
    case ErrorCode::kRangeViolation: return "RangeViolation";
    case ErrorCode::kPartialFunction: return "PartialFunction";
    case ErrorCode::kInvalidInterval: return "InvalidInterval";
    case ErrorCode::kInvalidParam: return "InvalidParam";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kDimensionError: return "DimensionError";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kNotACover: return "NotACover";
    case ErrorCode::kCapExceeded: return "CapExceeded";
    case ErrorCode::kSizeExceeded: return "SizeExceeded";
    case ErrorCode::kRetryExhausted: return "RetryExhausted";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace lipfilter
