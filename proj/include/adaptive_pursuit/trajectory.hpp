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
#include <span>
#include <vector>

#include "adaptive_pursuit/geometry.hpp"

namespace adaptive_pursuit {

/// Map-frame waypoint; `heading` points at the next waypoint of the loop.
struct Waypoint {
  double x = 0.0;
  double y = 0.0;
  double heading = 0.0;

  Point2 position() const { return {x, y}; }
};

struct NearestPoint {
  double arc_pos = 0.0;  ///< in [0, total_length)
  Point2 point;
  std::size_t segment_index = 0;
  double distance = 0.0;
};

/// Closed-loop polyline through N >= 3 waypoints. Segment i joins waypoint i
/// to waypoint (i + 1) mod N. Immutable once built; all queries are const.
class Trajectory {
 public:
  /// Throws kTooFewWaypoints, or kDuplicateConsecutivePoints with the index
  /// of the first point of the offending segment.
  static Trajectory FromPoints(std::span<const Point2> points);

  std::size_t size() const { return waypoints_.size(); }
  const std::vector<Waypoint>& waypoints() const { return waypoints_; }
  const Waypoint& waypoint(std::size_t i) const { return waypoints_[i]; }
  const std::vector<double>& cum_arclength() const { return cum_arclength_; }
  double total_length() const { return total_length_; }
  double segment_length(std::size_t i) const { return segment_lengths_[i]; }

  /// Reduces any arc position into [0, total_length).
  double WrapArc(double arc_pos) const;

  /// Closest point over all segments. Ties within 1e-12 go to the lower
  /// segment index.
  NearestPoint Nearest(Point2 p) const;

  /// Point at arc position (arc_pos + lookahead) mod total_length.
  /// Requires 0 < lookahead < total_length.
  Point2 GoalAt(double arc_pos, double lookahead) const;

  /// Point at an arbitrary arc position (wrapped), linearly interpolated.
  Point2 PointAt(double arc_pos) const;

  double LateralDeviation(Point2 p) const { return Nearest(p).distance; }

  /// Forward arc distance from `from` to `to`, in [0, total_length).
  double ForwardDistance(double from, double to) const;

 private:
  Trajectory() = default;

  std::vector<Waypoint> waypoints_;
  std::vector<double> cum_arclength_;
  std::vector<double> segment_lengths_;
  double total_length_ = 0.0;
};

}  // namespace adaptive_pursuit
