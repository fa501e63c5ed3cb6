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

#ifndef OMSTRATA_ERROR_H_
#define OMSTRATA_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace omstrata {

// Every typed failure raised by the library. Callers switch on code();
// what() carries a human-readable detail line.
enum class ErrorCode {
  // geometry
  kCoincidentPoints,
  kParallel,
  kIdentical,
  kNotCollinear,
  kDegeneratePoints,
  kDegenerateSource,
  kDegenerateTarget,
  kNonPositiveHeight,
  // oriented matroids
  kNotSpanning,
  kGroundSetMismatch,
  kDomainMismatch,
  kDuplicateLabel,
  // grassmann
  kRankDeficient,
  // construction
  kDegenerateStep,
  kIndexOutOfRange,
  kSeedRejected,
  // io
  kSchemaError,
  kRationalParseError,
};

std::string_view ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + detail),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace omstrata

#endif  // OMSTRATA_ERROR_H_
