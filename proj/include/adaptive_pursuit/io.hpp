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
#include <istream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "adaptive_pursuit/optimizer.hpp"
#include "adaptive_pursuit/simulator.hpp"
#include "adaptive_pursuit/trajectory.hpp"

namespace adaptive_pursuit {

/// Shortest decimal text that parses back to exactly `value`.
std::string FormatDouble(double value);

// Track CSV: header `x,y` or `x,y,heading`. The heading column is accepted
// and ignored; headings are always recomputed from positions.
Trajectory ParseTrackCsv(std::istream& in);
Trajectory LoadTrackCsv(const std::filesystem::path& path);
std::string TrackCsv(const Trajectory& traj);
void SaveTrackCsv(const std::filesystem::path& path, const Trajectory& traj);

// Labels CSV: header `waypoint_index,lookahead_m,label_index`, one row per
// waypoint. Only the label indices survive a round trip; beta and the raw
// scores are not stored.
std::string LabelsCsv(const Trajectory& traj, const LabelAssignment& assignment,
                      const LookaheadSet& lset);
void SaveLabelsCsv(const std::filesystem::path& path, const Trajectory& traj,
                   const LabelAssignment& assignment, const LookaheadSet& lset);
LabelAssignment ParseLabelsCsv(std::istream& in, const Trajectory& traj,
                               const LookaheadSet& lset);
LabelAssignment LoadLabelsCsv(const std::filesystem::path& path, const Trajectory& traj,
                              const LookaheadSet& lset);

// Trace CSV: header `t,x,y,heading,v,steering,lookahead`.
std::string TraceCsv(std::span<const TraceRow> trace);
void SaveTraceCsv(const std::filesystem::path& path, std::span<const TraceRow> trace);
std::vector<TraceRow> ParseTraceCsv(std::istream& in);

/// {status, lap_time_s, avg_speed_mps, total_deviation_ms, max_deviation_m}
std::string MetricsJson(const LapResult& lap);

/// `beta,status,lap_time_s,avg_speed_mps,total_deviation_ms,max_deviation_m`
std::string SweepReportCsv(std::span<const SweepRow> rows);
std::string SweepReportJson(std::span<const SweepRow> rows);

std::string CompareReportJson(const BaselineReport& report, const LookaheadSet& lset);

void WriteTextFile(const std::filesystem::path& path, std::string_view contents);

}  // namespace adaptive_pursuit
