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

#include "adaptive_pursuit/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "adaptive_pursuit/error.hpp"
#include "parallel.hpp"

namespace adaptive_pursuit {
namespace {

void RequireBeta(double beta) {
  if (!(beta >= 0.0 && beta <= 1.0)) {
    throw Error(ErrorCode::kBetaOutOfRange,
                "beta must lie in [0, 1], got " + std::to_string(beta));
  }
}

// Min-max normalization into [0, 1]; a constant column maps to zeros.
std::vector<double> Normalize(const std::vector<double>& values) {
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  const double min = *lo;
  const double range = *hi - *lo;
  std::vector<double> out(values.size(), 0.0);
  if (range > 0.0) {
    for (std::size_t j = 0; j < values.size(); ++j) out[j] = (values[j] - min) / range;
  }
  return out;
}

struct Run {
  std::size_t start;
  std::size_t length;
  std::size_t label;
};

// Maximal runs of equal labels around the loop, beginning at the first index
// that starts a run. Empty when every label is the same.
std::vector<Run> CyclicRuns(const std::vector<std::size_t>& labels) {
  const std::size_t n = labels.size();
  std::size_t first = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (labels[i] != labels[(i + n - 1) % n]) {
      first = i;
      break;
    }
  }
  std::vector<Run> runs;
  if (first == n) return runs;
  for (std::size_t k = 0; k < n;) {
    const std::size_t start = (first + k) % n;
    std::size_t len = 1;
    while (k + len < n && labels[(first + k + len) % n] == labels[start]) ++len;
    runs.push_back({start, len, labels[start]});
    k += len;
  }
  return runs;
}

}  // namespace

LookaheadSet::LookaheadSet() : labels_{1.0, 1.5, 2.0} {}

LookaheadSet::LookaheadSet(std::vector<double> labels) : labels_(std::move(labels)) {
  if (labels_.size() < 2) {
    throw Error(ErrorCode::kInvalidConfig, "need at least 2 lookahead labels");
  }
  for (std::size_t j = 0; j < labels_.size(); ++j) {
    if (!(labels_[j] > 0.0)) {
      throw Error(ErrorCode::kInvalidConfig, "lookahead labels must be > 0");
    }
    if (j > 0 && !(labels_[j] > labels_[j - 1])) {
      throw Error(ErrorCode::kInvalidConfig, "lookahead labels must be strictly increasing");
    }
  }
}

std::optional<std::size_t> LookaheadSet::IndexOf(double lookahead) const {
  for (std::size_t j = 0; j < labels_.size(); ++j) {
    if (std::abs(labels_[j] - lookahead) <= 1e-9) return j;
  }
  return std::nullopt;
}

LookaheadSchedule LabelAssignment::ToSchedule(const LookaheadSet& lset) const {
  std::vector<double> per_waypoint;
  per_waypoint.reserve(label_index.size());
  for (std::size_t idx : label_index) {
    if (idx >= lset.size()) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  "label index " + std::to_string(idx) + " with only " +
                      std::to_string(lset.size()) + " labels");
    }
    per_waypoint.push_back(lset[idx]);
  }
  return LookaheadSchedule::PerWaypoint(std::move(per_waypoint));
}

WaypointScore ScoreWaypoint(std::span<const GammaOutcome> outcomes, double beta) {
  RequireBeta(beta);
  if (outcomes.size() < 2) {
    throw Error(ErrorCode::kInvalidConfig, "need at least 2 outcomes to score");
  }
  std::vector<double> v;
  std::vector<double> d;
  v.reserve(outcomes.size());
  d.reserve(outcomes.size());
  for (const GammaOutcome& o : outcomes) {
    v.push_back(o.v_exit);
    d.push_back(o.delta);
  }
  const std::vector<double> v_norm = Normalize(v);
  const std::vector<double> d_norm = Normalize(d);

  WaypointScore result;
  result.scores.resize(outcomes.size());
  for (std::size_t j = 0; j < outcomes.size(); ++j) {
    result.scores[j] = beta * v_norm[j] - (1.0 - beta) * d_norm[j];
    const double top = result.scores[result.best];
    if (result.scores[j] > top ||
        (result.scores[j] == top && d_norm[j] < d_norm[result.best])) {
      result.best = j;
    }
  }
  return result;
}

GammaTable EvaluateGammaTable(const Trajectory& traj, const LookaheadSet& lset,
                              const ControllerConfig& cfg, const SimConfig& sim,
                              unsigned threads) {
  cfg.Validate();
  sim.Validate(traj.size());
  GammaTable table(traj.size(), lset.size());
  internal::ParallelFor(traj.size(), threads, [&](std::size_t i) {
    for (std::size_t j = 0; j < lset.size(); ++j) {
      const VehicleState entry = OnPathEntryState(traj, i, lset[j], cfg);
      table.at(i, j) = EvaluateGamma(traj, i, lset[j], entry, cfg, sim);
    }
  });
  return table;
}

LabelAssignment AssignFromTable(const GammaTable& table, double beta) {
  RequireBeta(beta);
  LabelAssignment a;
  a.beta = beta;
  a.label_index.reserve(table.num_waypoints());
  a.scores.reserve(table.num_waypoints());
  for (std::size_t i = 0; i < table.num_waypoints(); ++i) {
    WaypointScore s = ScoreWaypoint(table.row(i), beta);
    a.label_index.push_back(s.best);
    a.scores.push_back(std::move(s.scores));
  }
  return a;
}

LabelAssignment AssignLabels(const Trajectory& traj, const LookaheadSet& lset,
                             double beta, const ControllerConfig& cfg,
                             const SimConfig& sim, unsigned threads) {
  RequireBeta(beta);
  return AssignFromTable(EvaluateGammaTable(traj, lset, cfg, sim, threads), beta);
}

LabelAssignment SmoothLabels(const LabelAssignment& assignment, std::size_t min_run) {
  if (min_run == 0) {
    throw Error(ErrorCode::kInvalidConfig, "min_run must be >= 1");
  }
  LabelAssignment out = assignment;
  std::vector<std::size_t>& labels = out.label_index;
  const std::size_t n = labels.size();
  while (true) {
    const std::vector<Run> runs = CyclicRuns(labels);
    if (runs.size() < 2) break;

    std::size_t pick = runs.size();
    for (std::size_t r = 0; r < runs.size(); ++r) {
      if (runs[r].length >= min_run) continue;
      if (pick == runs.size() || runs[r].length < runs[pick].length ||
          (runs[r].length == runs[pick].length && runs[r].start < runs[pick].start)) {
        pick = r;
      }
    }
    if (pick == runs.size()) break;

    const Run& prev = runs[(pick + runs.size() - 1) % runs.size()];
    const Run& next = runs[(pick + 1) % runs.size()];
    const std::size_t target = std::min(prev.label, next.label);
    for (std::size_t k = 0; k < runs[pick].length; ++k) {
      labels[(runs[pick].start + k) % n] = target;
    }
  }
  return out;
}

std::vector<SweepRow> SweepBeta(const Trajectory& traj, const LookaheadSet& lset,
                                std::span<const double> betas,
                                const ControllerConfig& cfg, const SimConfig& sim,
                                const SweepOptions& options) {
  for (double beta : betas) RequireBeta(beta);
  const GammaTable table = EvaluateGammaTable(traj, lset, cfg, sim, options.threads);

  std::vector<SweepRow> rows(betas.size());
  internal::ParallelFor(betas.size(), options.threads, [&](std::size_t r) {
    rows[r].beta = betas[r];
    rows[r].assignment = SmoothLabels(AssignFromTable(table, betas[r]), options.min_run);
    rows[r].lap = SimulateLap(traj, rows[r].assignment.ToSchedule(lset), cfg, sim,
                              options.record_trace);
  });
  return rows;
}

std::optional<std::size_t> BestRow(std::span<const SweepRow> rows) {
  std::optional<std::size_t> best;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (!rows[r].lap.completed()) continue;
    if (!best || rows[r].lap.lap_time < rows[*best].lap.lap_time) best = r;
  }
  return best;
}

Improvement ComputeImprovement(const LapResult& adaptive, const LapResult& baseline) {
  auto lower_is_better = [](double adapt, double base) {
    return base == 0.0 ? 0.0 : (base - adapt) / base * 100.0;
  };
  Improvement imp;
  imp.lap_time_pct = lower_is_better(adaptive.lap_time, baseline.lap_time);
  imp.avg_speed_pct = baseline.avg_speed == 0.0
                          ? 0.0
                          : (adaptive.avg_speed - baseline.avg_speed) / baseline.avg_speed * 100.0;
  imp.total_deviation_pct = lower_is_better(adaptive.total_deviation, baseline.total_deviation);
  imp.max_deviation_pct = lower_is_better(adaptive.max_deviation, baseline.max_deviation);
  return imp;
}

BaselineReport CompareToBaseline(const Trajectory& traj, const LookaheadSet& lset,
                                 const LabelAssignment& assignment,
                                 const ControllerConfig& cfg, const SimConfig& sim,
                                 unsigned threads) {
  if (assignment.label_index.size() != traj.size()) {
    throw Error(ErrorCode::kScheduleSizeMismatch,
                "assignment has " + std::to_string(assignment.label_index.size()) +
                    " entries for " + std::to_string(traj.size()) + " waypoints");
  }
  const LookaheadSchedule adaptive_schedule = assignment.ToSchedule(lset);

  // Slot 0 is the adaptive run, slots 1..K the fixed baselines.
  std::vector<LapResult> laps(lset.size() + 1);
  internal::ParallelFor(laps.size(), threads, [&](std::size_t k) {
    laps[k] = k == 0 ? SimulateLap(traj, adaptive_schedule, cfg, sim, false)
                     : SimulateLap(traj, LookaheadSchedule::Fixed(lset[k - 1]), cfg, sim, false);
  });

  BaselineReport report;
  report.adaptive = std::move(laps[0]);
  report.fixed.assign(std::make_move_iterator(laps.begin() + 1),
                      std::make_move_iterator(laps.end()));

  std::optional<std::size_t> best;
  for (std::size_t j = 0; j < report.fixed.size(); ++j) {
    if (!report.fixed[j].completed()) continue;
    if (!best || report.fixed[j].lap_time < report.fixed[*best].lap_time) best = j;
  }
  if (!best) {
    throw Error(ErrorCode::kNoCompletingBaseline, "every fixed-lookahead run failed");
  }
  report.baseline_label = *best;
  report.improvement = ComputeImprovement(report.adaptive, report.fixed[*best]);
  return report;
}

}  // namespace adaptive_pursuit
