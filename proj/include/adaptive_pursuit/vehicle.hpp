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

#include "adaptive_pursuit/controller.hpp"

namespace adaptive_pursuit {

/// Rear-axle pose plus forward speed. heading in (-pi, pi], v >= 0.
struct VehicleState {
  double x = 0.0;
  double y = 0.0;
  double heading = 0.0;
  double v = 0.0;

  Pose2 pose() const { return {x, y, heading}; }
  Point2 position() const { return {x, y}; }

  friend bool operator==(const VehicleState&, const VehicleState&) = default;
};

/// One forward-Euler step of the kinematic bicycle model referenced at the
/// rear axle. Speed first moves toward `v_cmd` by at most accel_limit * dt,
/// then the updated speed drives position and yaw.
///
/// `steering` is clamped to +-max_steer and `v_cmd` to [0, v_max].
/// Throws kNonpositiveTimestep when dt <= 0.
VehicleState Step(const VehicleState& state, double steering, double v_cmd,
                  double dt, const ControllerConfig& cfg);

}  // namespace adaptive_pursuit
