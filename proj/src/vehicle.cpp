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

#include "adaptive_pursuit/vehicle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "adaptive_pursuit/error.hpp"

namespace adaptive_pursuit {

VehicleState Step(const VehicleState& state, double steering, double v_cmd,
                  double dt, const ControllerConfig& cfg) {
  if (!(dt > 0.0)) {
    throw Error(ErrorCode::kNonpositiveTimestep,
                "dt must be > 0, got " + std::to_string(dt));
  }
  steering = std::clamp(steering, -cfg.max_steer, cfg.max_steer);
  v_cmd = std::clamp(v_cmd, 0.0, cfg.v_max);

  const double dv_max = cfg.accel_limit * dt;
  VehicleState next;
  // Bounded by v_cmd directly so rounding never overshoots it.
  if (v_cmd >= state.v) {
    next.v = std::min(state.v + dv_max, v_cmd);
  } else {
    next.v = std::max(state.v - dv_max, v_cmd);
  }
  next.x = state.x + next.v * std::cos(state.heading) * dt;
  next.y = state.y + next.v * std::sin(state.heading) * dt;
  next.heading =
      WrapAngle(state.heading + next.v / cfg.wheelbase * std::tan(steering) * dt);
  return next;
}

}  // namespace adaptive_pursuit
