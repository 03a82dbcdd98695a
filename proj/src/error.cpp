// Copyright 2026 The adaptive_pursuit Authors
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

#include "adaptive_pursuit/error.hpp"

namespace adaptive_pursuit {

std::string_view ToString(ErrorCode code) {
  switch (code) {
    case ErrorCode::kTooFewWaypoints: return "TooFewWaypoints";
    case ErrorCode::kDuplicateConsecutivePoints: return "DuplicateConsecutivePoints";
    case ErrorCode::kLookaheadExceedsTrack: return "LookaheadExceedsTrack";
    case ErrorCode::kNonpositiveLookahead: return "NonpositiveLookahead";
    case ErrorCode::kNonpositiveWheelbase: return "NonpositiveWheelbase";
    case ErrorCode::kNonpositiveTimestep: return "NonpositiveTimestep";
    case ErrorCode::kDegenerateGoal: return "DegenerateGoal";
    case ErrorCode::kInvalidConfig: return "InvalidConfig";
    case ErrorCode::kScheduleSizeMismatch: return "ScheduleSizeMismatch";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kBetaOutOfRange: return "BetaOutOfRange";
    case ErrorCode::kNoCompletingBaseline: return "NoCompletingBaseline";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kInvalidDimensions: return "InvalidDimensions";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message,
             std::optional<std::size_t> detail)
    : std::runtime_error(std::string(ToString(code)) + ": " + message),
      code_(code),
      detail_(detail) {}

}  // namespace adaptive_pursuit
