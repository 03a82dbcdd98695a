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

#include "adaptive_pursuit/controller.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "adaptive_pursuit/error.hpp"

namespace adaptive_pursuit {
namespace {

void RequirePositiveLookahead(double lookahead) {
  if (!(lookahead > 0.0)) {
    throw Error(ErrorCode::kNonpositiveLookahead,
                "lookahead must be > 0, got " + std::to_string(lookahead));
  }
}

void Require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::kInvalidConfig, what);
}

}  // namespace

void ControllerConfig::Validate() const {
  if (!(wheelbase > 0.0)) {
    throw Error(ErrorCode::kNonpositiveWheelbase,
                "wheelbase must be > 0, got " + std::to_string(wheelbase));
  }
  Require(max_steer > 0.0, "max_steer must be > 0");
  Require(v_min > 0.0, "v_min must be > 0");
  Require(v_max >= v_min, "v_max must be >= v_min");
  Require(accel_limit > 0.0, "accel_limit must be > 0");
  Require(l_min > 0.0, "l_min must be > 0");
  Require(l_max > l_min, "l_max must be > l_min");
}

double PursuitAlpha(const Pose2& pose, Point2 goal) {
  const double dx = goal.x - pose.x;
  const double dy = goal.y - pose.y;
  if (std::hypot(dx, dy) < 1e-9) {
    throw Error(ErrorCode::kDegenerateGoal, "goal coincides with the pose");
  }
  return WrapAngle(std::atan2(dy, dx) - pose.heading);
}

double Curvature(double alpha, double lookahead) {
  RequirePositiveLookahead(lookahead);
  return 2.0 * std::sin(alpha) / lookahead;
}

double AckermannSteering(double alpha, double lookahead, double wheelbase) {
  RequirePositiveLookahead(lookahead);
  if (!(wheelbase > 0.0)) {
    throw Error(ErrorCode::kNonpositiveWheelbase,
                "wheelbase must be > 0, got " + std::to_string(wheelbase));
  }
  return std::atan(2.0 * wheelbase * std::sin(alpha) / lookahead);
}

double SpeedForLookahead(double lookahead, const ControllerConfig& cfg) {
  RequirePositiveLookahead(lookahead);
  const double frac =
      std::clamp((lookahead - cfg.l_min) / (cfg.l_max - cfg.l_min), 0.0, 1.0);
  return std::clamp(cfg.v_min + frac * (cfg.v_max - cfg.v_min), cfg.v_min,
                    cfg.v_max);
}

SteeringCommand ComputeCommandFromArc(const Pose2& pose, const Trajectory& traj,
                                      double arc_pos, double lookahead,
                                      const ControllerConfig& cfg) {
  SteeringCommand cmd;
  cmd.goal = traj.GoalAt(arc_pos, lookahead);
  cmd.alpha = PursuitAlpha(pose, cmd.goal);
  // The arc through the goal is set by the straight-line distance to it.
  const double reach = Distance(pose.position(), cmd.goal);
  cmd.curvature = Curvature(cmd.alpha, reach);
  cmd.steering = std::clamp(AckermannSteering(cmd.alpha, reach, cfg.wheelbase),
                            -cfg.max_steer, cfg.max_steer);
  cmd.speed = SpeedForLookahead(lookahead, cfg);
  return cmd;
}

SteeringCommand ComputeCommand(const Pose2& pose, const Trajectory& traj,
                               double lookahead, const ControllerConfig& cfg) {
  return ComputeCommandFromArc(pose, traj, traj.Nearest(pose.position()).arc_pos,
                               lookahead, cfg);
}

}  // namespace adaptive_pursuit
