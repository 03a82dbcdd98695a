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

#include "adaptive_pursuit/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <system_error>

#include <nlohmann/json.hpp>

#include "adaptive_pursuit/error.hpp"

namespace adaptive_pursuit {
namespace {

using ordered_json = nlohmann::ordered_json;

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> SplitFields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = line.find(',', pos);
    out.push_back(Trim(line.substr(pos, comma - pos)));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

[[noreturn]] void ThrowParse(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::kParseError, "line " + std::to_string(line) + ": " + what, line);
}

double ParseDouble(std::string_view field, std::size_t line) {
  double value = 0.0;
  const char* end = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (ec != std::errc() || ptr != end || field.empty()) {
    ThrowParse(line, "malformed number '" + std::string(field) + "'");
  }
  return value;
}

std::size_t ParseIndex(std::string_view field, std::size_t line) {
  std::size_t value = 0;
  const char* end = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (ec != std::errc() || ptr != end || field.empty()) {
    ThrowParse(line, "malformed index '" + std::string(field) + "'");
  }
  return value;
}

// Hands the first non-blank line to `header` and every later non-blank line
// to `row`, each with its 1-based line number.
template <typename HeaderFn, typename RowFn>
void ReadCsv(std::istream& in, HeaderFn&& header, RowFn&& row) {
  std::string text;
  std::size_t line_no = 0;
  bool seen_header = false;
  while (std::getline(in, text)) {
    ++line_no;
    const std::string_view line = Trim(text);
    if (line.empty()) continue;
    const std::vector<std::string_view> fields = SplitFields(line);
    if (!seen_header) {
      header(fields, line_no);
      seen_header = true;
      continue;
    }
    row(fields, line_no);
  }
  if (!seen_header) throw Error(ErrorCode::kParseError, "empty CSV input", 1);
}

std::ifstream OpenForRead(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  return in;
}

auto ExpectHeader(std::vector<std::string_view> expected) {
  return [expected = std::move(expected)](const std::vector<std::string_view>& fields,
                                          std::size_t line) {
    if (fields != expected) {
      std::string want;
      for (const auto& h : expected) want += (want.empty() ? "" : ",") + std::string(h);
      ThrowParse(line, "expected header '" + want + "'");
    }
  };
}

ordered_json MetricsObject(const LapResult& lap) {
  ordered_json j;
  j["status"] = std::string(ToString(lap.status));
  j["lap_time_s"] = lap.lap_time;
  j["avg_speed_mps"] = lap.avg_speed;
  j["total_deviation_ms"] = lap.total_deviation;
  j["max_deviation_m"] = lap.max_deviation;
  return j;
}

}  // namespace

std::string FormatDouble(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

Trajectory ParseTrackCsv(std::istream& in) {
  std::vector<Point2> points;
  std::size_t columns = 0;
  ReadCsv(
      in,
      [&](const std::vector<std::string_view>& fields, std::size_t line) {
        const bool xy = fields.size() == 2 && fields[0] == "x" && fields[1] == "y";
        const bool xyh = fields.size() == 3 && fields[0] == "x" && fields[1] == "y" &&
                         fields[2] == "heading";
        if (!xy && !xyh) ThrowParse(line, "expected header 'x,y' or 'x,y,heading'");
        columns = fields.size();
      },
      [&](const std::vector<std::string_view>& fields, std::size_t line) {
        if (fields.size() != columns) {
          ThrowParse(line, "expected " + std::to_string(columns) + " fields");
        }
        points.push_back({ParseDouble(fields[0], line), ParseDouble(fields[1], line)});
        if (columns == 3) ParseDouble(fields[2], line);
      });
  return Trajectory::FromPoints(points);
}

Trajectory LoadTrackCsv(const std::filesystem::path& path) {
  std::ifstream in = OpenForRead(path);
  return ParseTrackCsv(in);
}

std::string TrackCsv(const Trajectory& traj) {
  std::string out = "x,y,heading\n";
  for (const Waypoint& w : traj.waypoints()) {
    out += FormatDouble(w.x) + "," + FormatDouble(w.y) + "," + FormatDouble(w.heading) + "\n";
  }
  return out;
}

void SaveTrackCsv(const std::filesystem::path& path, const Trajectory& traj) {
  WriteTextFile(path, TrackCsv(traj));
}

std::string LabelsCsv(const Trajectory& traj, const LabelAssignment& assignment,
                      const LookaheadSet& lset) {
  if (assignment.label_index.size() != traj.size()) {
    throw Error(ErrorCode::kScheduleSizeMismatch,
                "assignment has " + std::to_string(assignment.label_index.size()) +
                    " entries for " + std::to_string(traj.size()) + " waypoints");
  }
  std::string out = "waypoint_index,lookahead_m,label_index\n";
  for (std::size_t i = 0; i < assignment.label_index.size(); ++i) {
    const std::size_t j = assignment.label_index[i];
    if (j >= lset.size()) {
      throw Error(ErrorCode::kIndexOutOfRange, "label index " + std::to_string(j));
    }
    out += std::to_string(i) + "," + FormatDouble(lset[j]) + "," + std::to_string(j) + "\n";
  }
  return out;
}

void SaveLabelsCsv(const std::filesystem::path& path, const Trajectory& traj,
                   const LabelAssignment& assignment, const LookaheadSet& lset) {
  WriteTextFile(path, LabelsCsv(traj, assignment, lset));
}

LabelAssignment ParseLabelsCsv(std::istream& in, const Trajectory& traj,
                               const LookaheadSet& lset) {
  struct Row {
    std::size_t waypoint;
    std::size_t label;
    std::size_t line;
  };
  std::vector<Row> rows;
  ReadCsv(in, ExpectHeader({"waypoint_index", "lookahead_m", "label_index"}),
          [&](const std::vector<std::string_view>& fields, std::size_t line) {
    if (fields.size() != 3) ThrowParse(line, "expected 3 fields");
    const std::size_t waypoint = ParseIndex(fields[0], line);
    const double lookahead = ParseDouble(fields[1], line);
    const std::size_t label = ParseIndex(fields[2], line);
    if (label >= lset.size()) {
      ThrowParse(line, "label_index " + std::to_string(label) + " outside the lookahead set");
    }
    if (std::abs(lset[label] - lookahead) > 1e-9) {
      ThrowParse(line, "lookahead_m does not match label_index");
    }
    rows.push_back({waypoint, label, line});
  });

  if (rows.size() != traj.size()) {
    throw Error(ErrorCode::kScheduleSizeMismatch,
                "labels file has " + std::to_string(rows.size()) + " rows for " +
                    std::to_string(traj.size()) + " waypoints");
  }
  LabelAssignment a;
  a.label_index.assign(traj.size(), 0);
  std::vector<bool> seen(traj.size(), false);
  for (const Row& r : rows) {
    if (r.waypoint >= traj.size() || seen[r.waypoint]) {
      ThrowParse(r.line, "waypoint_index " + std::to_string(r.waypoint) +
                             " out of range or repeated");
    }
    seen[r.waypoint] = true;
    a.label_index[r.waypoint] = r.label;
  }
  return a;
}

LabelAssignment LoadLabelsCsv(const std::filesystem::path& path, const Trajectory& traj,
                              const LookaheadSet& lset) {
  std::ifstream in = OpenForRead(path);
  return ParseLabelsCsv(in, traj, lset);
}

std::string TraceCsv(std::span<const TraceRow> trace) {
  std::string out = "t,x,y,heading,v,steering,lookahead\n";
  for (const TraceRow& r : trace) {
    out += FormatDouble(r.t) + "," + FormatDouble(r.state.x) + "," +
           FormatDouble(r.state.y) + "," + FormatDouble(r.state.heading) + "," +
           FormatDouble(r.state.v) + "," + FormatDouble(r.steering) + "," +
           FormatDouble(r.lookahead) + "\n";
  }
  return out;
}

void SaveTraceCsv(const std::filesystem::path& path, std::span<const TraceRow> trace) {
  WriteTextFile(path, TraceCsv(trace));
}

std::vector<TraceRow> ParseTraceCsv(std::istream& in) {
  std::vector<TraceRow> trace;
  ReadCsv(in, ExpectHeader({"t", "x", "y", "heading", "v", "steering", "lookahead"}),
          [&](const std::vector<std::string_view>& fields, std::size_t line) {
    if (fields.size() != 7) ThrowParse(line, "expected 7 fields");
    TraceRow r;
    r.t = ParseDouble(fields[0], line);
    r.state = {ParseDouble(fields[1], line), ParseDouble(fields[2], line),
               ParseDouble(fields[3], line), ParseDouble(fields[4], line)};
    r.steering = ParseDouble(fields[5], line);
    r.lookahead = ParseDouble(fields[6], line);
    trace.push_back(r);
  });
  return trace;
}

std::string MetricsJson(const LapResult& lap) {
  return MetricsObject(lap).dump(2) + "\n";
}

std::string SweepReportCsv(std::span<const SweepRow> rows) {
  std::string out = "beta,status,lap_time_s,avg_speed_mps,total_deviation_ms,max_deviation_m\n";
  for (const SweepRow& r : rows) {
    out += FormatDouble(r.beta) + "," + std::string(ToString(r.lap.status)) + "," +
           FormatDouble(r.lap.lap_time) + "," + FormatDouble(r.lap.avg_speed) + "," +
           FormatDouble(r.lap.total_deviation) + "," + FormatDouble(r.lap.max_deviation) + "\n";
  }
  return out;
}

std::string SweepReportJson(std::span<const SweepRow> rows) {
  ordered_json arr = ordered_json::array();
  for (const SweepRow& r : rows) {
    ordered_json j;
    j["beta"] = r.beta;
    const ordered_json metrics = MetricsObject(r.lap);
    for (const auto& [key, value] : metrics.items()) j[key] = value;
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

std::string CompareReportJson(const BaselineReport& report, const LookaheadSet& lset) {
  ordered_json j;
  j["adaptive"] = MetricsObject(report.adaptive);
  ordered_json fixed = ordered_json::array();
  for (std::size_t k = 0; k < report.fixed.size(); ++k) {
    ordered_json f;
    f["lookahead_m"] = lset[k];
    const ordered_json metrics = MetricsObject(report.fixed[k]);
    for (const auto& [key, value] : metrics.items()) f[key] = value;
    fixed.push_back(std::move(f));
  }
  j["fixed"] = std::move(fixed);
  j["baseline_lookahead_m"] = lset[report.baseline_label];
  ordered_json imp;
  imp["lap_time_pct"] = report.improvement.lap_time_pct;
  imp["avg_speed_pct"] = report.improvement.avg_speed_pct;
  imp["total_deviation_pct"] = report.improvement.total_deviation_pct;
  imp["max_deviation_pct"] = report.improvement.max_deviation_pct;
  j["improvement"] = std::move(imp);
  return j.dump(2) + "\n";
}

void WriteTextFile(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIoError, "cannot open " + path.string() + " for writing");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw Error(ErrorCode::kIoError, "write failed for " + path.string());
}

}  // namespace adaptive_pursuit
