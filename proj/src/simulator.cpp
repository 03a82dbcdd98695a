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

#include "adaptive_pursuit/simulator.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "adaptive_pursuit/error.hpp"

namespace adaptive_pursuit {
namespace {

constexpr double kLapProgressFraction = 0.99;
// Gamma deviations are reported on this grid [m]; finer differences are
// rounding noise that min-max normalization would otherwise amplify.
constexpr double kDeviationResolution = 1e-9;

double Quantize(double deviation) {
  return std::round(deviation / kDeviationResolution) * kDeviationResolution;
}

void Require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::kInvalidConfig, what);
}

// Arc advance between two consecutive nearest-point positions, taking the
// short way around the seam.
double SignedArcDelta(const Trajectory& traj, double from, double to) {
  const double total = traj.total_length();
  double d = to - from;
  if (d > 0.5 * total) d -= total;
  if (d <= -0.5 * total) d += total;
  return d;
}

}  // namespace

void SimConfig::Validate(std::size_t num_waypoints) const {
  if (!(dt > 0.0)) {
    throw Error(ErrorCode::kNonpositiveTimestep,
                "dt must be > 0, got " + std::to_string(dt));
  }
  Require(max_sim_time > 0.0, "max_sim_time must be > 0");
  Require(dnf_deviation > 0.0, "dnf_deviation must be > 0");
  Require(gamma_horizon >= 1, "gamma_horizon must be >= 1");
  if (num_waypoints != 0) {
    Require(gamma_horizon < num_waypoints,
            "gamma_horizon must be smaller than the waypoint count");
    Require(start_index < num_waypoints, "start_index out of range");
  }
}

LookaheadSchedule LookaheadSchedule::Fixed(double lookahead) {
  if (!(lookahead > 0.0)) {
    throw Error(ErrorCode::kNonpositiveLookahead,
                "lookahead must be > 0, got " + std::to_string(lookahead));
  }
  LookaheadSchedule s;
  s.fixed_ = lookahead;
  return s;
}

LookaheadSchedule LookaheadSchedule::PerWaypoint(std::vector<double> lookaheads) {
  if (lookaheads.empty()) {
    throw Error(ErrorCode::kScheduleSizeMismatch, "empty per-waypoint schedule");
  }
  for (double l : lookaheads) {
    if (!(l > 0.0)) {
      throw Error(ErrorCode::kNonpositiveLookahead,
                  "lookahead must be > 0, got " + std::to_string(l));
    }
  }
  LookaheadSchedule s;
  s.per_waypoint_ = std::move(lookaheads);
  return s;
}

std::string_view ToString(LapStatus status) {
  switch (status) {
    case LapStatus::kCompleted: return "Completed";
    case LapStatus::kDnfDeviation: return "DNF_Deviation";
    case LapStatus::kDnfTimeout: return "DNF_Timeout";
  }
  return "Unknown";
}

std::size_t NearestWaypointIndex(const Trajectory& traj, const NearestPoint& near) {
  const std::size_t i = near.segment_index;
  const std::size_t j = (i + 1) % traj.size();
  const double to_start = Distance(near.point, traj.waypoint(i).position());
  const double to_end = Distance(near.point, traj.waypoint(j).position());
  return to_end < to_start ? j : i;
}

LapResult SimulateLap(const Trajectory& traj, const LookaheadSchedule& schedule,
                      const ControllerConfig& cfg, const SimConfig& sim,
                      bool record_trace) {
  cfg.Validate();
  sim.Validate(traj.size());
  if (!schedule.is_fixed() && schedule.per_waypoint().size() != traj.size()) {
    throw Error(ErrorCode::kScheduleSizeMismatch,
                "schedule has " + std::to_string(schedule.per_waypoint().size()) +
                    " entries for " + std::to_string(traj.size()) + " waypoints");
  }

  const Waypoint& start = traj.waypoint(sim.start_index);
  const Point2 start_point = start.position();
  const Point2 start_tangent{std::cos(start.heading), std::sin(start.heading)};
  const double lap_progress = kLapProgressFraction * traj.total_length();

  VehicleState state{start.x, start.y, start.heading, cfg.v_min};
  NearestPoint near = traj.Nearest(state.position());

  LapResult result;
  if (record_trace) {
    result.trace.push_back(
        {0.0, state, 0.0, schedule.At(NearestWaypointIndex(traj, near))});
  }

  double progress = 0.0;
  for (std::size_t tick = 1;; ++tick) {
    const double lookahead = schedule.At(NearestWaypointIndex(traj, near));
    const SteeringCommand cmd =
        ComputeCommandFromArc(state.pose(), traj, near.arc_pos, lookahead, cfg);
    const VehicleState next = Step(state, cmd.steering, cmd.speed, sim.dt, cfg);
    const NearestPoint next_near = traj.Nearest(next.position());
    const double t = static_cast<double>(tick) * sim.dt;

    result.distance += Distance(state.position(), next.position());
    progress += SignedArcDelta(traj, near.arc_pos, next_near.arc_pos);
    const double deviation = next_near.distance;
    result.total_deviation += deviation * sim.dt;
    if (deviation > result.max_deviation) result.max_deviation = deviation;
    if (record_trace) result.trace.push_back({t, next, cmd.steering, lookahead});

    const double before = Dot(state.position() - start_point, start_tangent);
    const double after = Dot(next.position() - start_point, start_tangent);
    state = next;
    near = next_near;
    result.lap_time = t;

    if (deviation > sim.dnf_deviation) {
      result.status = LapStatus::kDnfDeviation;
      break;
    }
    if (progress >= lap_progress && before < 0.0 && after >= 0.0) {
      result.status = LapStatus::kCompleted;
      break;
    }
    if (t >= sim.max_sim_time) {
      result.status = LapStatus::kDnfTimeout;
      break;
    }
  }
  result.avg_speed = result.distance / result.lap_time;
  return result;
}

VehicleState OnPathEntryState(const Trajectory& traj, std::size_t index,
                              double lookahead, const ControllerConfig& cfg) {
  if (index >= traj.size()) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "waypoint " + std::to_string(index) + " of " +
                    std::to_string(traj.size()));
  }
  const Waypoint& w = traj.waypoint(index);
  return {w.x, w.y, w.heading, SpeedForLookahead(lookahead, cfg)};
}

GammaOutcome EvaluateGamma(const Trajectory& traj, std::size_t index,
                           double lookahead, const VehicleState& entry,
                           const ControllerConfig& cfg, const SimConfig& sim) {
  if (index >= traj.size()) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "waypoint " + std::to_string(index) + " of " +
                    std::to_string(traj.size()));
  }
  if (!(lookahead > 0.0)) {
    throw Error(ErrorCode::kNonpositiveLookahead,
                "lookahead must be > 0, got " + std::to_string(lookahead));
  }
  cfg.Validate();
  sim.Validate(traj.size());

  const GammaOutcome dnf{0.0, sim.dnf_deviation, true};

  NearestPoint near = traj.Nearest(entry.position());
  if (near.distance > sim.dnf_deviation) return dnf;

  const std::size_t exit_index = (index + sim.gamma_horizon) % traj.size();
  const double stretch =
      traj.ForwardDistance(near.arc_pos, traj.cum_arclength()[exit_index]);

  VehicleState state = entry;
  double progress = 0.0;
  double max_deviation = near.distance;
  for (std::size_t tick = 1;; ++tick) {
    const SteeringCommand cmd =
        ComputeCommandFromArc(state.pose(), traj, near.arc_pos, lookahead, cfg);
    const VehicleState next = Step(state, cmd.steering, cmd.speed, sim.dt, cfg);
    const NearestPoint next_near = traj.Nearest(next.position());
    progress += SignedArcDelta(traj, near.arc_pos, next_near.arc_pos);
    if (next_near.distance > max_deviation) max_deviation = next_near.distance;
    state = next;
    near = next_near;

    if (near.distance > sim.dnf_deviation) return dnf;
    if (progress >= stretch) return {state.v, Quantize(max_deviation), false};
    if (static_cast<double>(tick) * sim.dt >= sim.max_sim_time) return dnf;
  }
}

}  // namespace adaptive_pursuit
