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

#include "adaptive_pursuit/geometry.hpp"
#include "adaptive_pursuit/trajectory.hpp"

namespace adaptive_pursuit {

/// Vehicle and speed-law parameters. Defaults describe a 1/10-scale chassis.
struct ControllerConfig {
  double wheelbase = 0.325;     ///< rear axle to front axle [m]
  double max_steer = 0.4189;    ///< steering clamp [rad] (24 deg)
  double v_min = 1.5;           ///< speed at l_min [m/s]
  double v_max = 4.0;           ///< speed at l_max [m/s]
  double accel_limit = 3.0;     ///< symmetric |dv/dt| bound [m/s^2]
  double l_min = 1.0;           ///< lookahead mapped to v_min [m]
  double l_max = 2.0;           ///< lookahead mapped to v_max [m]

  /// Throws kInvalidConfig (kNonpositiveWheelbase for the wheelbase).
  void Validate() const;
};

/// Pose of the rear-axle base_link.
struct Pose2 {
  double x = 0.0;
  double y = 0.0;
  double heading = 0.0;

  Point2 position() const { return {x, y}; }
};

struct SteeringCommand {
  double steering = 0.0;   ///< clamped to [-max_steer, max_steer]
  double speed = 0.0;      ///< in [v_min, v_max]
  Point2 goal;
  double alpha = 0.0;
  double curvature = 0.0;
};

/// Bearing of `goal` relative to the pose heading, in (-pi, pi].
/// Throws kDegenerateGoal when the goal sits on the pose.
double PursuitAlpha(const Pose2& pose, Point2 goal);

/// Pursuit arc curvature 2 sin(alpha) / lookahead.
double Curvature(double alpha, double lookahead);

/// Unclamped front-wheel angle atan(2 L sin(alpha) / lookahead).
double AckermannSteering(double alpha, double lookahead, double wheelbase);

/// Linear lookahead-to-speed law, clamped to [v_min, v_max].
double SpeedForLookahead(double lookahead, const ControllerConfig& cfg);

/// Full pursuit step: nearest point, goal `lookahead` meters further along
/// the path, alpha, curvature, clamped steering and speed. Curvature and
/// steering use the straight-line distance from the pose to that goal, so the
/// commanded arc passes through it; the speed follows `lookahead` itself.
SteeringCommand ComputeCommand(const Pose2& pose, const Trajectory& traj,
                               double lookahead, const ControllerConfig& cfg);

/// Same as above with the nearest-point arc position already known.
SteeringCommand ComputeCommandFromArc(const Pose2& pose, const Trajectory& traj,
                                      double arc_pos, double lookahead,
                                      const ControllerConfig& cfg);

}  // namespace adaptive_pursuit
