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

#include "adaptive_pursuit/trajectory.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "adaptive_pursuit/error.hpp"

namespace adaptive_pursuit {
namespace {

constexpr double kMinSegmentLength = 1e-6;
constexpr double kTieTolerance = 1e-12;

}  // namespace

Trajectory Trajectory::FromPoints(std::span<const Point2> points) {
  const std::size_t n = points.size();
  if (n < 3) {
    throw Error(ErrorCode::kTooFewWaypoints,
                "need at least 3 waypoints, got " + std::to_string(n));
  }

  Trajectory traj;
  traj.waypoints_.reserve(n);
  traj.cum_arclength_.reserve(n);
  traj.segment_lengths_.reserve(n);

  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 a = points[i];
    const Point2 b = points[(i + 1) % n];
    const double len = Distance(a, b);
    if (!(len >= kMinSegmentLength)) {
      throw Error(ErrorCode::kDuplicateConsecutivePoints,
                  "waypoints " + std::to_string(i) + " and " +
                      std::to_string((i + 1) % n) + " coincide",
                  i);
    }
    traj.waypoints_.push_back({a.x, a.y, std::atan2(b.y - a.y, b.x - a.x)});
    traj.cum_arclength_.push_back(s);
    traj.segment_lengths_.push_back(len);
    s += len;
  }
  traj.total_length_ = s;
  return traj;
}

double Trajectory::WrapArc(double arc_pos) const {
  double s = std::fmod(arc_pos, total_length_);
  if (s < 0.0) s += total_length_;
  // fmod of a tiny negative can round back up to total_length_.
  if (s >= total_length_) s = 0.0;
  return s;
}

double Trajectory::ForwardDistance(double from, double to) const {
  return WrapArc(WrapArc(to) - WrapArc(from));
}

NearestPoint Trajectory::Nearest(Point2 p) const {
  const std::size_t n = waypoints_.size();
  NearestPoint best;
  best.distance = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 a = waypoints_[i].position();
    const Point2 b = waypoints_[(i + 1) % n].position();
    const Point2 ab = b - a;
    const double len = segment_lengths_[i];
    const double t = std::clamp(Dot(p - a, ab) / (len * len), 0.0, 1.0);
    const Point2 q = t == 1.0 ? b : a + t * ab;
    const double d = Distance(p, q);
    if (d < best.distance - kTieTolerance) {
      best.distance = d;
      best.point = q;
      best.segment_index = i;
      best.arc_pos = cum_arclength_[i] + t * len;
    }
  }
  best.arc_pos = WrapArc(best.arc_pos);
  return best;
}

Point2 Trajectory::PointAt(double arc_pos) const {
  const double s = WrapArc(arc_pos);
  // Last segment whose start is <= s.
  const auto it = std::upper_bound(cum_arclength_.begin(), cum_arclength_.end(), s);
  const std::size_t i = static_cast<std::size_t>(it - cum_arclength_.begin()) - 1;
  const std::size_t j = (i + 1) % waypoints_.size();
  const double t = std::clamp((s - cum_arclength_[i]) / segment_lengths_[i], 0.0, 1.0);
  const Point2 a = waypoints_[i].position();
  const Point2 b = waypoints_[j].position();
  return a + t * (b - a);
}

Point2 Trajectory::GoalAt(double arc_pos, double lookahead) const {
  if (!(lookahead > 0.0)) {
    throw Error(ErrorCode::kNonpositiveLookahead,
                "lookahead must be > 0, got " + std::to_string(lookahead));
  }
  if (lookahead >= total_length_) {
    throw Error(ErrorCode::kLookaheadExceedsTrack,
                "lookahead " + std::to_string(lookahead) +
                    " m is not shorter than the track (" +
                    std::to_string(total_length_) + " m)");
  }
  return PointAt(WrapArc(arc_pos) + lookahead);
}

}  // namespace adaptive_pursuit
