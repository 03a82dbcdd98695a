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

#include "adaptive_pursuit/tracks.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "adaptive_pursuit/error.hpp"

namespace adaptive_pursuit {
namespace {

constexpr double kPi = std::numbers::pi;

std::size_t SegmentsFor(double length, double spacing) {
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(length / spacing - 1e-9)));
}

// Appends points along a line, excluding the end point.
void AppendLine(std::vector<Point2>& out, Point2 from, Point2 to, double spacing) {
  const std::size_t n = SegmentsFor(Distance(from, to), spacing);
  for (std::size_t k = 0; k < n; ++k) {
    const double t = static_cast<double>(k) / static_cast<double>(n);
    out.push_back(from + t * (to - from));
  }
}

// Appends a counter-clockwise arc from angle `a0` sweeping `sweep` radians,
// excluding the end point.
void AppendArc(std::vector<Point2>& out, Point2 center, double radius, double a0,
               double sweep, double spacing) {
  const std::size_t n = SegmentsFor(radius * sweep, spacing);
  for (std::size_t k = 0; k < n; ++k) {
    const double a = a0 + sweep * static_cast<double>(k) / static_cast<double>(n);
    out.push_back({center.x + radius * std::cos(a), center.y + radius * std::sin(a)});
  }
}

std::vector<Point2> Stadium(double straight, double radius, double spacing) {
  const double half = 0.5 * straight;
  std::vector<Point2> pts;
  AppendLine(pts, {0.0, -radius}, {half, -radius}, spacing);
  AppendArc(pts, {half, 0.0}, radius, -0.5 * kPi, kPi, spacing);
  AppendLine(pts, {half, radius}, {-half, radius}, spacing);
  AppendArc(pts, {-half, 0.0}, radius, 0.5 * kPi, kPi, spacing);
  AppendLine(pts, {-half, -radius}, {0.0, -radius}, spacing);
  return pts;
}

}  // namespace

std::optional<TrackShape> ParseTrackShape(std::string_view name) {
  if (name == "circle") return TrackShape::kCircle;
  if (name == "oval") return TrackShape::kOval;
  if (name == "hairpin_circuit" || name == "hairpin") return TrackShape::kHairpinCircuit;
  return std::nullopt;
}

std::string_view ToString(TrackShape shape) {
  switch (shape) {
    case TrackShape::kCircle: return "circle";
    case TrackShape::kOval: return "oval";
    case TrackShape::kHairpinCircuit: return "hairpin_circuit";
  }
  return "unknown";
}

TrackParams TrackParams::DefaultsFor(TrackShape shape) {
  switch (shape) {
    case TrackShape::kCircle: return {3.0, 0.0, 0.1};
    case TrackShape::kOval: return {2.0, 10.0, 0.1};
    case TrackShape::kHairpinCircuit: return {1.0, 12.0, 0.1};
  }
  return {};
}

std::vector<Point2> GenerateTrackPoints(TrackShape shape, const TrackParams& params) {
  if (!(params.spacing > 0.0)) {
    throw Error(ErrorCode::kInvalidDimensions,
                "spacing must be > 0, got " + std::to_string(params.spacing));
  }
  if (!(params.radius > 0.0)) {
    throw Error(ErrorCode::kInvalidDimensions,
                "radius must be > 0, got " + std::to_string(params.radius));
  }
  if (shape == TrackShape::kCircle) {
    std::vector<Point2> pts;
    AppendArc(pts, {0.0, 0.0}, params.radius, -0.5 * kPi, 2.0 * kPi, params.spacing);
    return pts;
  }
  if (!(params.straight_length > 0.0)) {
    throw Error(ErrorCode::kInvalidDimensions,
                "straight_length must be > 0, got " +
                    std::to_string(params.straight_length));
  }
  return Stadium(params.straight_length, params.radius, params.spacing);
}

Trajectory GenerateTrack(TrackShape shape, const TrackParams& params) {
  const std::vector<Point2> pts = GenerateTrackPoints(shape, params);
  return Trajectory::FromPoints(pts);
}

}  // namespace adaptive_pursuit
