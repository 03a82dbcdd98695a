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

#include "adaptive_pursuit/svg.hpp"

#include <algorithm>
#include <array>
#include <cstdio>

#include "adaptive_pursuit/error.hpp"
#include "adaptive_pursuit/io.hpp"

namespace adaptive_pursuit {
namespace {

constexpr std::array<std::string_view, 2> kTwoColors = {"#d62728", "#2ca02c"};
constexpr std::array<std::string_view, 3> kThreeColors = {"#d62728", "#e6c619", "#2ca02c"};
constexpr std::array<std::string_view, 8> kWideColors = {
    "#d62728", "#ff7f0e", "#e6c619", "#2ca02c",
    "#17becf", "#1f77b4", "#9467bd", "#8c564b"};

constexpr double kCanvas = 800.0;
constexpr double kMargin = 40.0;
constexpr double kLegendHeight = 24.0;

std::string Fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

}  // namespace

std::string_view LabelColor(std::size_t j, std::size_t num_labels) {
  if (num_labels > kWideColors.size()) {
    throw Error(ErrorCode::kInvalidConfig,
                "at most " + std::to_string(kWideColors.size()) + " labels can be drawn");
  }
  if (j >= num_labels) {
    throw Error(ErrorCode::kIndexOutOfRange, "label index " + std::to_string(j));
  }
  if (num_labels <= 2) return kTwoColors[j];
  if (num_labels == 3) return kThreeColors[j];
  return kWideColors[j];
}

std::string RenderLabelSvg(const Trajectory& traj, const LabelAssignment& assignment,
                           const LookaheadSet& lset) {
  if (assignment.label_index.size() != traj.size()) {
    throw Error(ErrorCode::kScheduleSizeMismatch,
                "assignment has " + std::to_string(assignment.label_index.size()) +
                    " entries for " + std::to_string(traj.size()) + " waypoints");
  }
  // Check the palette up front so a bad K fails before any output.
  LabelColor(0, lset.size());

  double min_x = traj.waypoint(0).x, max_x = min_x;
  double min_y = traj.waypoint(0).y, max_y = min_y;
  for (const Waypoint& w : traj.waypoints()) {
    min_x = std::min(min_x, w.x);
    max_x = std::max(max_x, w.x);
    min_y = std::min(min_y, w.y);
    max_y = std::max(max_y, w.y);
  }
  const double span = std::max({max_x - min_x, max_y - min_y, 1e-9});
  const double scale = (kCanvas - 2.0 * kMargin) / span;
  const double width = (max_x - min_x) * scale + 2.0 * kMargin;
  const double height =
      (max_y - min_y) * scale + 2.0 * kMargin + kLegendHeight * static_cast<double>(lset.size());
  auto px = [&](double x) { return Fmt(kMargin + (x - min_x) * scale); };
  auto py = [&](double y) { return Fmt(kMargin + (max_y - y) * scale); };

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + Fmt(width) +
         "\" height=\"" + Fmt(height) + "\" viewBox=\"0 0 " + Fmt(width) + " " +
         Fmt(height) + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out += "<g stroke-width=\"4\" stroke-linecap=\"round\" fill=\"none\">\n";
  const std::size_t n = traj.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Waypoint& a = traj.waypoint(i);
    const Waypoint& b = traj.waypoint((i + 1) % n);
    const std::size_t j = assignment.label_index[i];
    out += "<line x1=\"" + px(a.x) + "\" y1=\"" + py(a.y) + "\" x2=\"" + px(b.x) +
           "\" y2=\"" + py(b.y) + "\" stroke=\"" + std::string(LabelColor(j, lset.size())) +
           "\"/>\n";
  }
  out += "</g>\n";

  const Waypoint& start = traj.waypoint(0);
  out += "<circle cx=\"" + px(start.x) + "\" cy=\"" + py(start.y) +
         "\" r=\"5\" fill=\"black\"/>\n";

  out += "<g font-family=\"sans-serif\" font-size=\"14\">\n";
  const double legend_top = (max_y - min_y) * scale + 2.0 * kMargin;
  for (std::size_t j = 0; j < lset.size(); ++j) {
    const double y = legend_top + kLegendHeight * static_cast<double>(j);
    out += "<rect x=\"" + Fmt(kMargin) + "\" y=\"" + Fmt(y) +
           "\" width=\"16\" height=\"16\" fill=\"" + std::string(LabelColor(j, lset.size())) +
           "\"/>\n";
    out += "<text x=\"" + Fmt(kMargin + 24.0) + "\" y=\"" + Fmt(y + 13.0) +
           "\">lookahead " + FormatDouble(lset[j]) + " m</text>\n";
  }
  out += "</g>\n</svg>\n";
  return out;
}

void EmitLabelSvg(const std::filesystem::path& path, const Trajectory& traj,
                  const LabelAssignment& assignment, const LookaheadSet& lset) {
  WriteTextFile(path, RenderLabelSvg(traj, assignment, lset));
}

}  // namespace adaptive_pursuit
