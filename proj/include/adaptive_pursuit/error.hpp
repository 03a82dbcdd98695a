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

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace adaptive_pursuit {

enum class ErrorCode {
  kTooFewWaypoints,
  kDuplicateConsecutivePoints,
  kLookaheadExceedsTrack,
  kNonpositiveLookahead,
  kNonpositiveWheelbase,
  kNonpositiveTimestep,
  kDegenerateGoal,
  kInvalidConfig,
  kScheduleSizeMismatch,
  kIndexOutOfRange,
  kBetaOutOfRange,
  kNoCompletingBaseline,
  kParseError,
  kInvalidDimensions,
  kIoError,
};

std::string_view ToString(ErrorCode code);

/// Single exception type for the library. `detail()` carries the offending
/// waypoint index (kDuplicateConsecutivePoints) or the 1-based line number
/// (kParseError) when one applies.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> detail = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> detail_;
};

}  // namespace adaptive_pursuit
