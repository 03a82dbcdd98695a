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
#include <string_view>
#include <vector>

#include "adaptive_pursuit/controller.hpp"
#include "adaptive_pursuit/trajectory.hpp"
#include "adaptive_pursuit/vehicle.hpp"

namespace adaptive_pursuit {

struct SimConfig {
  double dt = 0.02;              ///< control period, also the pursuit recompute time [s]
  double max_sim_time = 300.0;   ///< lap budget [s]
  double dnf_deviation = 1.0;    ///< abort threshold on lateral deviation [m]
  std::size_t gamma_horizon = 20;  ///< waypoints covered by one gamma evaluation
  std::size_t start_index = 0;

  /// Checks the positivity constraints and, when `num_waypoints` is nonzero,
  /// 1 <= gamma_horizon < num_waypoints and start_index < num_waypoints.
  void Validate(std::size_t num_waypoints = 0) const;
};

/// Which lookahead the controller uses: one fixed value, or one value per
/// waypoint (the label of the waypoint nearest the vehicle is active).
class LookaheadSchedule {
 public:
  static LookaheadSchedule Fixed(double lookahead);
  static LookaheadSchedule PerWaypoint(std::vector<double> lookaheads);

  bool is_fixed() const { return per_waypoint_.empty(); }
  double fixed_value() const { return fixed_; }
  const std::vector<double>& per_waypoint() const { return per_waypoint_; }

  double At(std::size_t waypoint_index) const {
    return is_fixed() ? fixed_ : per_waypoint_[waypoint_index];
  }

 private:
  double fixed_ = 0.0;
  std::vector<double> per_waypoint_;
};

enum class LapStatus { kCompleted, kDnfDeviation, kDnfTimeout };

std::string_view ToString(LapStatus status);

/// One control tick. `steering` is the command applied over the tick that
/// ended at `t` (zero on the initial row).
struct TraceRow {
  double t = 0.0;
  VehicleState state;
  double steering = 0.0;
  double lookahead = 0.0;
};

struct LapResult {
  LapStatus status = LapStatus::kDnfTimeout;
  double lap_time = 0.0;          ///< [s]; time of termination for DNF runs
  double avg_speed = 0.0;         ///< distance / lap_time [m/s]
  double total_deviation = 0.0;   ///< time integral of lateral deviation [m s]
  double max_deviation = 0.0;     ///< [m]
  double distance = 0.0;          ///< integrated path length of the trace [m]
  std::vector<TraceRow> trace;

  bool completed() const { return status == LapStatus::kCompleted; }
};

/// Result of driving one fixed lookahead over the stretch following a waypoint.
struct GammaOutcome {
  double v_exit = 0.0;  ///< speed when the stretch is cleared [m/s]
  double delta = 0.0;   ///< max lateral deviation over the stretch [m], 1e-9 m grid
  bool dnf = false;     ///< stretch aborted; v_exit = 0, delta = dnf_deviation
};

/// Closed-loop lap from waypoint `sim.start_index` with tangent heading at
/// v_min. A lap completes once arc progress reaches 99% of the track and the
/// start line (the normal through the start waypoint) is crossed forward.
/// Throws kScheduleSizeMismatch if a per-waypoint schedule has the wrong size.
LapResult SimulateLap(const Trajectory& traj, const LookaheadSchedule& schedule,
                      const ControllerConfig& cfg, const SimConfig& sim,
                      bool record_trace = true);

/// On-path entry state at waypoint `index`, moving at the label's speed.
VehicleState OnPathEntryState(const Trajectory& traj, std::size_t index,
                              double lookahead, const ControllerConfig& cfg);

/// Drives `lookahead` from `entry` until arc progress passes waypoint
/// (index + gamma_horizon) mod N. Throws kIndexOutOfRange.
GammaOutcome EvaluateGamma(const Trajectory& traj, std::size_t index,
                           double lookahead, const VehicleState& entry,
                           const ControllerConfig& cfg, const SimConfig& sim);

/// Endpoint of the nearest segment that is closer to the projected point.
std::size_t NearestWaypointIndex(const Trajectory& traj, const NearestPoint& near);

}  // namespace adaptive_pursuit
