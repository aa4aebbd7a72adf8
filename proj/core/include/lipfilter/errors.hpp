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

#ifndef LIPFILTER_ERRORS_HPP_
#define LIPFILTER_ERRORS_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace lipfilter {

enum class ErrorCode {
  kOutOfDomain,
  kRangeViolation,
  kPartialFunction,
  kInvalidInterval,
  kInvalidParam,
  kParseError,
  kDimensionError,
  kBudgetExceeded,
  kNotACover,
  kCapExceeded,
  kSizeExceeded,
  kRetryExhausted,
  kIoError,
};

std::string_view ErrorCodeName(ErrorCode code);

// All library failures are reported through this type. The code is stable and
// is what the command-line tool serializes into its {"error": ...} object.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Parse errors carry the byte offset of the offending token.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : Error(ErrorCode::kParseError,
              message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace lipfilter

#endif  // LIPFILTER_ERRORS_HPP_
