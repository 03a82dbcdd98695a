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
#include <numeric>
#include <random>
#include <vector>

#include "adaptive_pursuit/error.hpp"
#include "adaptive_pursuit/tracks.hpp"
#include "gtest/gtest.h"

namespace adaptive_pursuit {
namespace {

// Exact rational evaluation of the mid-beta example: 1/2 * 1/2 - 1/2 * 2/7.
constexpr double kMidScore = 0.10714285714285714;

const std::vector<GammaOutcome> kExample{{1.5, 0.02, false}, {2.75, 0.10, false}, {4.0, 0.30, false}};

LabelAssignment FromLabels(std::vector<std::size_t> labels) {
  LabelAssignment a;
  a.label_index = std::move(labels);
  return a;
}

std::vector<std::size_t> Smoothed(std::vector<std::size_t> labels, std::size_t min_run) {
  return SmoothLabels(FromLabels(std::move(labels)), min_run).label_index;
}

Trajectory FiftyWaypointOval() {
  return GenerateTrack(TrackShape::kOval, {2.0, 10.0, 0.66});
}

TEST(ScoreWaypoint, MidBetaExample) {
  const WaypointScore s = ScoreWaypoint(kExample, 0.5);
  ASSERT_EQ(s.scores.size(), 3u);
  EXPECT_EQ(s.scores[0], 0.0);
  EXPECT_NEAR(s.scores[1], kMidScore, 1e-12);
  EXPECT_EQ(s.scores[2], 0.0);
  EXPECT_EQ(s.best, 1u);
}

TEST(ScoreWaypoint, Endpoints) {
  EXPECT_EQ(ScoreWaypoint(kExample, 0.0).best, 0u);
  EXPECT_EQ(ScoreWaypoint(kExample, 1.0).best, 2u);
  const std::vector<GammaOutcome> mixed{{3.0, 0.2, false}, {1.0, 0.05, false}, {2.0, 0.4, false}};
  EXPECT_EQ(ScoreWaypoint(mixed, 0.0).best, 1u);
  EXPECT_EQ(ScoreWaypoint(mixed, 1.0).best, 0u);
}

TEST(ScoreWaypoint, DegenerateColumnsAndTies) {
  // Equal speeds: deviation decides, even at beta = 1 where every score is 0.
  const std::vector<GammaOutcome> same_v{{2.0, 0.3, false}, {2.0, 0.1, false}, {2.0, 0.2, false}};
  EXPECT_EQ(ScoreWaypoint(same_v, 0.5).best, 1u);
  EXPECT_EQ(ScoreWaypoint(same_v, 1.0).scores, (std::vector<double>{0.0, 0.0, 0.0}));
  EXPECT_EQ(ScoreWaypoint(same_v, 1.0).best, 1u);
  // Equal deviations at beta = 0: smallest label.
  const std::vector<GammaOutcome> same_d{{1.0, 0.2, false}, {3.0, 0.2, false}};
  EXPECT_EQ(ScoreWaypoint(same_d, 0.0).best, 0u);
  const std::vector<GammaOutcome> all_same{{2.0, 0.1, false}, {2.0, 0.1, false}};
  const WaypointScore s = ScoreWaypoint(all_same, 0.3);
  EXPECT_EQ(s.scores, (std::vector<double>{0.0, 0.0}));
  EXPECT_EQ(s.best, 0u);
}

TEST(ScoreWaypoint, Errors) {
  try {
    ScoreWaypoint(kExample, 1.5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBetaOutOfRange);
  }
  EXPECT_THROW(ScoreWaypoint(kExample, -0.01), Error);
  EXPECT_THROW(ScoreWaypoint(std::span(kExample).first(1), 0.5), Error);
}

TEST(ScoreWaypointProperty, PositiveScalingKeepsTheChoice) {
  std::mt19937 rng(21);
  std::uniform_real_distribution<double> v(0.0, 4.0);
  std::uniform_real_distribution<double> d(0.0, 1.0);
  std::uniform_real_distribution<double> scale(0.1, 10.0);
  std::uniform_real_distribution<double> beta(0.0, 1.0);
  for (int k = 0; k < 2000; ++k) {
    std::vector<GammaOutcome> o(4);
    for (auto& g : o) g = {v(rng), d(rng), false};
    const double b = beta(rng);
    const double c = scale(rng);
    const double e = scale(rng);
    std::vector<GammaOutcome> scaled = o;
    for (auto& g : scaled) {
      g.v_exit *= c;
      g.delta *= e;
    }
    EXPECT_EQ(ScoreWaypoint(o, b).best, ScoreWaypoint(scaled, b).best);
  }
}

TEST(ScoreWaypointProperty, PermutingCandidatesPermutesScores) {
  std::mt19937 rng(22);
  std::uniform_real_distribution<double> v(0.0, 4.0);
  std::uniform_real_distribution<double> d(0.0, 1.0);
  for (int k = 0; k < 500; ++k) {
    std::vector<GammaOutcome> o(5);
    for (auto& g : o) g = {v(rng), d(rng), false};
    std::vector<std::size_t> perm(o.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<GammaOutcome> shuffled(o.size());
    for (std::size_t j = 0; j < o.size(); ++j) shuffled[j] = o[perm[j]];
    const WaypointScore a = ScoreWaypoint(o, 0.4);
    const WaypointScore b = ScoreWaypoint(shuffled, 0.4);
    for (std::size_t j = 0; j < o.size(); ++j) EXPECT_EQ(b.scores[j], a.scores[perm[j]]);
  }
}

TEST(LookaheadSet, ValidatesLabels) {
  EXPECT_EQ(LookaheadSet().labels(), (std::vector<double>{1.0, 1.5, 2.0}));
  EXPECT_THROW(LookaheadSet({1.0}), Error);
  EXPECT_THROW(LookaheadSet({1.0, 1.0}), Error);
  EXPECT_THROW(LookaheadSet({2.0, 1.0}), Error);
  EXPECT_THROW(LookaheadSet({0.0, 1.0}), Error);
  EXPECT_EQ(LookaheadSet().IndexOf(1.5), 1u);
  EXPECT_FALSE(LookaheadSet().IndexOf(1.25).has_value());
}

TEST(SmoothLabels, Examples) {
  EXPECT_EQ(Smoothed({0, 2, 1, 1, 0, 2}, 1), (std::vector<std::size_t>{0, 2, 1, 1, 0, 2}));
  EXPECT_EQ(Smoothed({2, 2, 0, 2, 2}, 2), (std::vector<std::size_t>{2, 2, 2, 2, 2}));
  EXPECT_EQ(Smoothed({0, 0, 1, 2, 2, 2, 1, 0, 0, 0}, 2),
            (std::vector<std::size_t>{0, 0, 0, 2, 2, 2, 0, 0, 0, 0}));
  // A short run straddling the seam is still one run.
  EXPECT_EQ(Smoothed({1, 0, 0, 0, 0, 0, 1}, 3), (std::vector<std::size_t>{0, 0, 0, 0, 0, 0, 0}));
  EXPECT_THROW(SmoothLabels(FromLabels({0, 1}), 0), Error);
}

TEST(SmoothLabels, KeepsScoresAndBeta) {
  LabelAssignment a = FromLabels({0, 0, 0, 1, 0, 0});
  a.beta = 0.25;
  a.scores.assign(6, {0.1, 0.2});
  const LabelAssignment s = SmoothLabels(a, 2);
  EXPECT_EQ(s.beta, 0.25);
  EXPECT_EQ(s.scores, a.scores);
  EXPECT_EQ(s.label_index, (std::vector<std::size_t>(6, 0)));
}

TEST(SmoothLabelsProperty, IdempotentAndNoNewLabels) {
  std::mt19937 rng(31);
  std::uniform_int_distribution<std::size_t> label(0, 3);
  std::uniform_int_distribution<std::size_t> length(1, 60);
  std::uniform_int_distribution<std::size_t> run(1, 6);
  for (int k = 0; k < 500; ++k) {
    std::vector<std::size_t> labels(length(rng));
    for (auto& l : labels) l = label(rng);
    const std::size_t m = run(rng);
    const auto once = Smoothed(labels, m);
    EXPECT_EQ(Smoothed(once, m), once);
    for (std::size_t l : once) {
      EXPECT_NE(std::find(labels.begin(), labels.end(), l), labels.end());
    }
  }
}

TEST(AssignLabels, EndpointsPickExtremes) {
  const Trajectory traj = FiftyWaypointOval();
  const LookaheadSet lset;
  const GammaTable table = EvaluateGammaTable(traj, lset, ControllerConfig{}, SimConfig{});
  const LabelAssignment a0 = AssignFromTable(table, 0.0);
  const LabelAssignment a1 = AssignFromTable(table, 1.0);
  for (std::size_t i = 0; i < traj.size(); ++i) {
    double min_d = table.at(i, 0).delta;
    double max_v = table.at(i, 0).v_exit;
    for (std::size_t j = 1; j < lset.size(); ++j) {
      min_d = std::min(min_d, table.at(i, j).delta);
      max_v = std::max(max_v, table.at(i, j).v_exit);
    }
    EXPECT_EQ(table.at(i, a0.label_index[i]).delta, min_d);
    EXPECT_EQ(table.at(i, a1.label_index[i]).v_exit, max_v);
  }
}

TEST(AssignLabels, FullSpeedWeightPicksTheLongestLabel) {
  const Trajectory traj = FiftyWaypointOval();
  ASSERT_GE(traj.size(), 45u);
  ASSERT_LE(traj.size(), 55u);
  const LookaheadSet lset;
  const LabelAssignment a = AssignLabels(traj, lset, 1.0, ControllerConfig{}, SimConfig{});
  EXPECT_EQ(a.label_index, std::vector<std::size_t>(traj.size(), 2));
  // Exhaustive check that no label dropped out on this track.
  const GammaTable table = EvaluateGammaTable(traj, lset, ControllerConfig{}, SimConfig{});
  for (std::size_t i = 0; i < traj.size(); ++i) {
    for (std::size_t j = 0; j < lset.size(); ++j) EXPECT_FALSE(table.at(i, j).dnf);
  }
}

TEST(AssignLabels, ConstantSpeedIgnoresBeta) {
  const Trajectory traj = GenerateTrack(TrackShape::kHairpinCircuit);
  ControllerConfig cfg;
  cfg.v_min = cfg.v_max = 2.0;
  const LookaheadSet lset;
  const GammaTable table = EvaluateGammaTable(traj, lset, cfg, SimConfig{});
  const auto reference = AssignFromTable(table, 0.0).label_index;
  for (double beta : {0.1, 0.25, 0.5, 0.75, 0.9, 1.0}) {
    EXPECT_EQ(AssignFromTable(table, beta).label_index, reference) << beta;
  }
}

struct OvalLandmarks {
  std::size_t mid_top = 0;
  std::size_t apex_right = 0;
  std::size_t apex_left = 0;
};

// Oval layout: bottom straight centered on waypoint 0, turn apexes at the far
// ends (+-x), top straight opposite.
OvalLandmarks FindLandmarks(const Trajectory& traj) {
  OvalLandmarks m;
  for (std::size_t i = 0; i < traj.size(); ++i) {
    const Waypoint& w = traj.waypoint(i);
    const Waypoint& top = traj.waypoint(m.mid_top);
    if (w.y > top.y || (w.y == top.y && std::abs(w.x) < std::abs(top.x))) m.mid_top = i;
    if (w.x > traj.waypoint(m.apex_right).x) m.apex_right = i;
    if (w.x < traj.waypoint(m.apex_left).x) m.apex_left = i;
  }
  return m;
}

LabelAssignment OvalMidBeta(const Trajectory& traj) {
  return SmoothLabels(AssignLabels(traj, LookaheadSet{}, 0.5, ControllerConfig{}, SimConfig{}), 3);
}

TEST(AssignLabels, OvalStraightsGetTheLongestLabel) {
  const Trajectory traj = GenerateTrack(TrackShape::kOval);
  const LookaheadSet lset;
  const LabelAssignment a = OvalMidBeta(traj);
  const OvalLandmarks m = FindLandmarks(traj);
  EXPECT_EQ(lset[a.label_index[0]], 2.0);
  EXPECT_EQ(lset[a.label_index[m.mid_top]], 2.0);
  // Straight waypoints whose gamma stretch (2 m) plus longest lookahead (2 m)
  // stays short of the turns at |x| = 5.
  for (std::size_t i = 0; i < traj.size(); ++i) {
    if (std::abs(traj.waypoint(i).x) < 0.9) EXPECT_EQ(a.label_index[i], 2u) << i;
  }
}

TEST(AssignLabels, OvalApexesGetTheShortestLabel) {
  const Trajectory traj = GenerateTrack(TrackShape::kOval);
  const LookaheadSet lset;
  const LabelAssignment a = OvalMidBeta(traj);
  const OvalLandmarks m = FindLandmarks(traj);
  EXPECT_EQ(lset[a.label_index[m.apex_right]], 1.0);
  EXPECT_EQ(lset[a.label_index[m.apex_left]], 1.0);
}

TEST(EvaluateGammaTable, ThreadCountDoesNotMatter) {
  const Trajectory traj = FiftyWaypointOval();
  const LookaheadSet lset;
  const GammaTable one = EvaluateGammaTable(traj, lset, ControllerConfig{}, SimConfig{}, 1);
  const GammaTable four = EvaluateGammaTable(traj, lset, ControllerConfig{}, SimConfig{}, 4);
  for (std::size_t i = 0; i < traj.size(); ++i) {
    for (std::size_t j = 0; j < lset.size(); ++j) {
      EXPECT_EQ(one.at(i, j).v_exit, four.at(i, j).v_exit);
      EXPECT_EQ(one.at(i, j).delta, four.at(i, j).delta);
    }
  }
}

TEST(SweepBeta, OneRowPerBeta) {
  const Trajectory traj = FiftyWaypointOval();
  const std::vector<double> five{0.0, 0.25, 0.5, 0.75, 1.0};
  const auto rows = SweepBeta(traj, LookaheadSet{}, five, ControllerConfig{}, SimConfig{});
  ASSERT_EQ(rows.size(), 5u);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    EXPECT_EQ(rows[r].beta, five[r]);
    EXPECT_EQ(rows[r].assignment.beta, five[r]);
    EXPECT_EQ(rows[r].assignment.label_index.size(), traj.size());
    EXPECT_TRUE(rows[r].lap.trace.empty());
  }
  const std::vector<double> one{0.5};
  EXPECT_EQ(SweepBeta(traj, LookaheadSet{}, one, ControllerConfig{}, SimConfig{}).size(), 1u);
  const std::vector<double> bad{0.5, 1.2};
  EXPECT_THROW(SweepBeta(traj, LookaheadSet{}, bad, ControllerConfig{}, SimConfig{}), Error);
}

TEST(SweepBeta, RowsMatchStandaloneRuns) {
  const Trajectory traj = FiftyWaypointOval();
  const LookaheadSet lset;
  const std::vector<double> betas{0.75, 0.0};
  const auto rows = SweepBeta(traj, lset, betas, ControllerConfig{}, SimConfig{});
  for (const SweepRow& row : rows) {
    const LabelAssignment alone =
        SmoothLabels(AssignLabels(traj, lset, row.beta, ControllerConfig{}, SimConfig{}), 3);
    EXPECT_EQ(row.assignment, alone);
    const LapResult lap =
        SimulateLap(traj, alone.ToSchedule(lset), ControllerConfig{}, SimConfig{}, false);
    EXPECT_EQ(row.lap.lap_time, lap.lap_time);
    EXPECT_EQ(row.lap.total_deviation, lap.total_deviation);
  }
}

TEST(BestRow, ShortestCompletedLap) {
  std::vector<SweepRow> rows(3);
  rows[0].lap.status = LapStatus::kCompleted;
  rows[0].lap.lap_time = 9.0;
  rows[1].lap.status = LapStatus::kDnfDeviation;
  rows[1].lap.lap_time = 1.0;
  rows[2].lap.status = LapStatus::kCompleted;
  rows[2].lap.lap_time = 9.0;
  EXPECT_EQ(BestRow(rows), 0u);
  rows[2].lap.lap_time = 8.0;
  EXPECT_EQ(BestRow(rows), 2u);
  EXPECT_FALSE(BestRow(std::span(rows).subspan(1, 1)).has_value());
}

TEST(ComputeImprovement, PositiveMeansBetter) {
  LapResult base;
  base.lap_time = 10.0;
  base.avg_speed = 2.0;
  base.total_deviation = 4.0;
  base.max_deviation = 0.5;
  LapResult adapt;
  adapt.lap_time = 8.0;
  adapt.avg_speed = 2.5;
  adapt.total_deviation = 5.0;
  adapt.max_deviation = 0.5;
  const Improvement imp = ComputeImprovement(adapt, base);
  EXPECT_DOUBLE_EQ(imp.lap_time_pct, 20.0);
  EXPECT_DOUBLE_EQ(imp.avg_speed_pct, 25.0);
  EXPECT_DOUBLE_EQ(imp.total_deviation_pct, -25.0);
  EXPECT_EQ(imp.max_deviation_pct, 0.0);
}

TEST(CompareToBaseline, ConstantAssignmentMatchesItsFixedRun) {
  const Trajectory traj = GenerateTrack(TrackShape::kHairpinCircuit);
  const LookaheadSet lset;
  const BaselineReport report = CompareToBaseline(
      traj, lset, FromLabels(std::vector<std::size_t>(traj.size(), 2)), ControllerConfig{},
      SimConfig{});
  ASSERT_EQ(report.fixed.size(), 3u);
  EXPECT_EQ(report.baseline_label, 2u);
  EXPECT_EQ(report.improvement.lap_time_pct, 0.0);
  EXPECT_EQ(report.improvement.total_deviation_pct, 0.0);
  EXPECT_EQ(report.adaptive.lap_time, report.fixed[2].lap_time);
}

TEST(CompareToBaseline, CircleHasNothingToExploit) {
  const Trajectory traj = GenerateTrack(TrackShape::kCircle);
  const LookaheadSet lset;
  const std::vector<double> betas{0.0, 0.25, 0.5, 0.75, 1.0};
  const auto rows = SweepBeta(traj, lset, betas, ControllerConfig{}, SimConfig{});
  const auto best = BestRow(rows);
  ASSERT_TRUE(best.has_value());
  const BaselineReport report =
      CompareToBaseline(traj, lset, rows[*best].assignment, ControllerConfig{}, SimConfig{});
  EXPECT_LT(std::abs(report.improvement.lap_time_pct), 2.0);
}

TEST(CompareToBaseline, NoCompletingBaseline) {
  const Trajectory traj = GenerateTrack(TrackShape::kCircle);
  SimConfig sim;
  sim.dnf_deviation = 1e-6;
  try {
    CompareToBaseline(traj, LookaheadSet{}, FromLabels(std::vector<std::size_t>(traj.size(), 0)),
                      ControllerConfig{}, sim);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNoCompletingBaseline);
  }
}

TEST(LabelAssignment, ToScheduleMapsIndices) {
  const LookaheadSet lset;
  const LookaheadSchedule s = FromLabels({0, 2, 1}).ToSchedule(lset);
  EXPECT_EQ(s.per_waypoint(), (std::vector<double>{1.0, 2.0, 1.5}));
  EXPECT_THROW(FromLabels({0, 3}).ToSchedule(lset), Error);
}

}  // namespace
}  // namespace adaptive_pursuit
