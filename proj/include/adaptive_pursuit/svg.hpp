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

#include <filesystem>
#include <string>
#include <string_view>

#include "adaptive_pursuit/optimizer.hpp"
#include "adaptive_pursuit/trajectory.hpp"

namespace adaptive_pursuit {

/// Stroke color of label `j` out of `num_labels`. Short to long runs
/// red -> yellow -> green for K <= 3; larger sets use an 8-color palette.
/// Throws kInvalidConfig when num_labels exceeds the palette.
std::string_view LabelColor(std::size_t j, std::size_t num_labels);

/// Track drawn segment by segment, each stroked in the color of its start
/// waypoint's label, with a legend. Output is byte-stable for equal inputs.
std::string RenderLabelSvg(const Trajectory& traj, const LabelAssignment& assignment,
                           const LookaheadSet& lset);

void EmitLabelSvg(const std::filesystem::path& path, const Trajectory& traj,
                  const LabelAssignment& assignment, const LookaheadSet& lset);

}  // namespace adaptive_pursuit
