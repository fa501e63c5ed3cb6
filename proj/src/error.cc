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

#include "omstrata/error.h"

namespace omstrata {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kCoincidentPoints: return "CoincidentPoints";
    case ErrorCode::kParallel: return "Parallel";
    case ErrorCode::kIdentical: return "Identical";
    case ErrorCode::kNotCollinear: return "NotCollinear";
    case ErrorCode::kDegeneratePoints: return "DegeneratePoints";
    case ErrorCode::kDegenerateSource: return "DegenerateSource";
    case ErrorCode::kDegenerateTarget: return "DegenerateTarget";
    case ErrorCode::kNonPositiveHeight: return "NonPositiveHeight";
    case ErrorCode::kNotSpanning: return "NotSpanning";
    case ErrorCode::kGroundSetMismatch: return "GroundSetMismatch";
    case ErrorCode::kDomainMismatch: return "DomainMismatch";
    case ErrorCode::kDuplicateLabel: return "DuplicateLabel";
    case ErrorCode::kRankDeficient: return "RankDeficient";
    case ErrorCode::kDegenerateStep: return "DegenerateStep";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kSeedRejected: return "SeedRejected";
    case ErrorCode::kSchemaError: return "SchemaError";
    case ErrorCode::kRationalParseError: return "RationalParseError";
  }
  return "Unknown";
}

}  // namespace omstrata
