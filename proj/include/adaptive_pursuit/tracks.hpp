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

#include <optional>
#include <string_view>
#include <vector>

#include "adaptive_pursuit/geometry.hpp"
#include "adaptive_pursuit/trajectory.hpp"

namespace adaptive_pursuit {

enum class TrackShape { kCircle, kOval, kHairpinCircuit };

std::optional<TrackShape> ParseTrackShape(std::string_view name);
std::string_view ToString(TrackShape shape);

/// Dimensions for the synthetic tracks. `straight_length` is ignored for the
/// circle. Every track runs counter-clockwise and starts mid-way along its
/// bottom straight (circle: at angle -pi/2).
struct TrackParams {
  double radius = 3.0;            ///< circle radius or turn radius [m]
  double straight_length = 0.0;   ///< length of each straight [m]
  double spacing = 0.1;           ///< target waypoint spacing [m]

  static TrackParams DefaultsFor(TrackShape shape);
};

/// Waypoints for `shape`. Throws kInvalidDimensions on nonpositive radius or
/// spacing, or a negative/zero straight for the straight-bearing shapes.
std::vector<Point2> GenerateTrackPoints(TrackShape shape, const TrackParams& params);

Trajectory GenerateTrack(TrackShape shape, const TrackParams& params);

inline Trajectory GenerateTrack(TrackShape shape) {
  return GenerateTrack(shape, TrackParams::DefaultsFor(shape));
}

}  // namespace adaptive_pursuit
