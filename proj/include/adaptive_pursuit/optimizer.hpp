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
#include <optional>
#include <span>
#include <vector>

#include "adaptive_pursuit/controller.hpp"
#include "adaptive_pursuit/simulator.hpp"
#include "adaptive_pursuit/trajectory.hpp"

namespace adaptive_pursuit {

/// Candidate lookahead distances, strictly increasing, K >= 2.
class LookaheadSet {
 public:
  /// {1.0, 1.5, 2.0} m.
  LookaheadSet();
  /// Throws kInvalidConfig unless K >= 2, all > 0, strictly increasing.
  explicit LookaheadSet(std::vector<double> labels);

  std::size_t size() const { return labels_.size(); }
  double operator[](std::size_t j) const { return labels_[j]; }
  const std::vector<double>& labels() const { return labels_; }

  /// Index of the label equal to `lookahead` (within 1e-9), if any.
  std::optional<std::size_t> IndexOf(double lookahead) const;

 private:
  std::vector<double> labels_;
};

/// Per-waypoint label choice. `scores` keeps the K raw scores behind each
/// choice (empty rows for hand-made or loaded assignments).
struct LabelAssignment {
  std::vector<std::size_t> label_index;
  double beta = 0.0;
  std::vector<std::vector<double>> scores;

  LookaheadSchedule ToSchedule(const LookaheadSet& lset) const;

  friend bool operator==(const LabelAssignment&, const LabelAssignment&) = default;
};

struct WaypointScore {
  std::vector<double> scores;
  std::size_t best = 0;
};

/// Convex-combination score of K outcomes listed in increasing label order.
/// v_exit and delta are min-max normalized across the K candidates (a column
/// with max == min normalizes to zeros), then
///   score_j = beta * v_norm_j - (1 - beta) * delta_norm_j.
/// `best` is the argmax; equal scores go to the lower normalized deviation,
/// then to the smallest label.
/// Throws kBetaOutOfRange, or kInvalidConfig for fewer than two outcomes.
WaypointScore ScoreWaypoint(std::span<const GammaOutcome> outcomes, double beta);

/// Gamma outcomes for every (waypoint, label) pair, row-major N x K.
class GammaTable {
 public:
  GammaTable(std::size_t num_waypoints, std::size_t num_labels)
      : num_labels_(num_labels), outcomes_(num_waypoints * num_labels) {}

  std::size_t num_waypoints() const { return outcomes_.size() / num_labels_; }
  std::size_t num_labels() const { return num_labels_; }

  GammaOutcome& at(std::size_t i, std::size_t j) { return outcomes_[i * num_labels_ + j]; }
  const GammaOutcome& at(std::size_t i, std::size_t j) const {
    return outcomes_[i * num_labels_ + j];
  }
  std::span<const GammaOutcome> row(std::size_t i) const {
    return {outcomes_.data() + i * num_labels_, num_labels_};
  }

 private:
  std::size_t num_labels_;
  std::vector<GammaOutcome> outcomes_;
};

/// Evaluates gamma from the on-path entry state of every waypoint for every
/// label. Rows are computed on up to `threads` workers and stored by index.
GammaTable EvaluateGammaTable(const Trajectory& traj, const LookaheadSet& lset,
                              const ControllerConfig& cfg, const SimConfig& sim,
                              unsigned threads = 1);

LabelAssignment AssignFromTable(const GammaTable& table, double beta);

/// Unsmoothed per-waypoint argmax of the convex-combination score.
LabelAssignment AssignLabels(const Trajectory& traj, const LookaheadSet& lset,
                             double beta, const ControllerConfig& cfg,
                             const SimConfig& sim, unsigned threads = 1);

/// Cyclically absorbs every run of identical labels shorter than `min_run`
/// into its neighbor with the smaller label index, shortest run first, until
/// all runs are long enough or a single run remains. Idempotent. Raw scores
/// are carried over untouched.
LabelAssignment SmoothLabels(const LabelAssignment& assignment, std::size_t min_run);

struct SweepOptions {
  std::size_t min_run = 3;
  unsigned threads = 1;
  bool record_trace = false;
};

struct SweepRow {
  double beta = 0.0;
  LabelAssignment assignment;  ///< smoothed
  LapResult lap;
};

/// Assign, smooth, and lap-simulate once per beta. The gamma table is shared
/// across betas since it does not depend on beta.
std::vector<SweepRow> SweepBeta(const Trajectory& traj, const LookaheadSet& lset,
                                std::span<const double> betas,
                                const ControllerConfig& cfg, const SimConfig& sim,
                                const SweepOptions& options = {});

/// Row with the shortest completed lap; ties go to the earlier row.
std::optional<std::size_t> BestRow(std::span<const SweepRow> rows);

/// Percent improvements of the adaptive lap over the baseline; positive is
/// better for every metric.
struct Improvement {
  double lap_time_pct = 0.0;
  double avg_speed_pct = 0.0;
  double total_deviation_pct = 0.0;
  double max_deviation_pct = 0.0;
};

Improvement ComputeImprovement(const LapResult& adaptive, const LapResult& baseline);

struct BaselineReport {
  LapResult adaptive;
  std::vector<LapResult> fixed;     ///< one per label, in label order
  std::size_t baseline_label = 0;   ///< fastest completing fixed run
  Improvement improvement;          ///< adaptive vs that baseline
};

/// Runs Fixed(l_j) for every label plus the adaptive schedule.
/// Throws kNoCompletingBaseline if every fixed run DNFs.
BaselineReport CompareToBaseline(const Trajectory& traj, const LookaheadSet& lset,
                                 const LabelAssignment& assignment,
                                 const ControllerConfig& cfg, const SimConfig& sim,
                                 unsigned threads = 1);

}  // namespace adaptive_pursuit
