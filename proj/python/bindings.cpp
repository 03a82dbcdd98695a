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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

#include "adaptive_pursuit/config.hpp"
#include "adaptive_pursuit/controller.hpp"
#include "adaptive_pursuit/error.hpp"
#include "adaptive_pursuit/io.hpp"
#include "adaptive_pursuit/optimizer.hpp"
#include "adaptive_pursuit/simulator.hpp"
#include "adaptive_pursuit/svg.hpp"
#include "adaptive_pursuit/tracks.hpp"
#include "adaptive_pursuit/trajectory.hpp"
#include "adaptive_pursuit/vehicle.hpp"

namespace py = pybind11;
namespace ap = adaptive_pursuit;

namespace {

std::vector<ap::Point2> ToPoints(const std::vector<std::pair<double, double>>& xy) {
  std::vector<ap::Point2> pts;
  pts.reserve(xy.size());
  for (const auto& [x, y] : xy) pts.push_back({x, y});
  return pts;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Adaptive-lookahead pure-pursuit: trajectories, controller, lap simulator "
            "and lookahead label optimizer.";

  auto error = py::register_exception<ap::Error>(m, "Error", PyExc_RuntimeError);
  (void)error;

  py::class_<ap::Point2>(m, "Point2")
      .def(py::init<double, double>(), py::arg("x") = 0.0, py::arg("y") = 0.0)
      .def_readwrite("x", &ap::Point2::x)
      .def_readwrite("y", &ap::Point2::y)
      .def("__repr__", [](const ap::Point2& p) {
        std::ostringstream os;
        os << "Point2(" << p.x << ", " << p.y << ")";
        return os.str();
      });

  py::class_<ap::Waypoint>(m, "Waypoint")
      .def_readonly("x", &ap::Waypoint::x)
      .def_readonly("y", &ap::Waypoint::y)
      .def_readonly("heading", &ap::Waypoint::heading);

  py::class_<ap::NearestPoint>(m, "NearestPoint")
      .def_readonly("arc_pos", &ap::NearestPoint::arc_pos)
      .def_readonly("point", &ap::NearestPoint::point)
      .def_readonly("segment_index", &ap::NearestPoint::segment_index)
      .def_readonly("distance", &ap::NearestPoint::distance);

  py::class_<ap::Trajectory>(m, "Trajectory")
      .def("__len__", &ap::Trajectory::size)
      .def_property_readonly("waypoints", &ap::Trajectory::waypoints)
      .def_property_readonly("cum_arclength", &ap::Trajectory::cum_arclength)
      .def_property_readonly("total_length", &ap::Trajectory::total_length)
      .def("nearest_point",
           [](const ap::Trajectory& t, double x, double y) { return t.Nearest({x, y}); },
           py::arg("x"), py::arg("y"))
      .def("goal_at_arclength",
           [](const ap::Trajectory& t, double arc_pos, double lookahead) {
             const ap::Point2 g = t.GoalAt(arc_pos, lookahead);
             return std::make_pair(g.x, g.y);
           },
           py::arg("arc_pos"), py::arg("lookahead"))
      .def("lateral_deviation",
           [](const ap::Trajectory& t, double x, double y) { return t.LateralDeviation({x, y}); },
           py::arg("x"), py::arg("y"));

  m.def("build_trajectory",
        [](const std::vector<std::pair<double, double>>& xy) {
          const auto pts = ToPoints(xy);
          return ap::Trajectory::FromPoints(pts);
        },
        py::arg("points"), "Closed-loop trajectory from (x, y) pairs.");

  py::class_<ap::ControllerConfig>(m, "ControllerConfig")
      .def(py::init<>())
      .def_readwrite("wheelbase", &ap::ControllerConfig::wheelbase)
      .def_readwrite("max_steer", &ap::ControllerConfig::max_steer)
      .def_readwrite("v_min", &ap::ControllerConfig::v_min)
      .def_readwrite("v_max", &ap::ControllerConfig::v_max)
      .def_readwrite("accel_limit", &ap::ControllerConfig::accel_limit)
      .def_readwrite("l_min", &ap::ControllerConfig::l_min)
      .def_readwrite("l_max", &ap::ControllerConfig::l_max)
      .def("validate", &ap::ControllerConfig::Validate);

  py::class_<ap::SimConfig>(m, "SimConfig")
      .def(py::init<>())
      .def_readwrite("dt", &ap::SimConfig::dt)
      .def_readwrite("max_sim_time", &ap::SimConfig::max_sim_time)
      .def_readwrite("dnf_deviation", &ap::SimConfig::dnf_deviation)
      .def_readwrite("gamma_horizon", &ap::SimConfig::gamma_horizon)
      .def_readwrite("start_index", &ap::SimConfig::start_index);

  py::class_<ap::SteeringCommand>(m, "SteeringCommand")
      .def_readonly("steering", &ap::SteeringCommand::steering)
      .def_readonly("speed", &ap::SteeringCommand::speed)
      .def_readonly("goal", &ap::SteeringCommand::goal)
      .def_readonly("alpha", &ap::SteeringCommand::alpha)
      .def_readonly("curvature", &ap::SteeringCommand::curvature);

  m.def("pursuit_alpha",
        [](double x, double y, double heading, double gx, double gy) {
          return ap::PursuitAlpha({x, y, heading}, {gx, gy});
        },
        py::arg("x"), py::arg("y"), py::arg("heading"), py::arg("goal_x"), py::arg("goal_y"));
  m.def("curvature", &ap::Curvature, py::arg("alpha"), py::arg("lookahead"));
  m.def("ackermann_steering", &ap::AckermannSteering, py::arg("alpha"),
        py::arg("lookahead"), py::arg("wheelbase"));
  m.def("speed_for_lookahead", &ap::SpeedForLookahead, py::arg("lookahead"), py::arg("cfg"));
  m.def("compute_command",
        [](double x, double y, double heading, const ap::Trajectory& traj, double lookahead,
           const ap::ControllerConfig& cfg) {
          return ap::ComputeCommand({x, y, heading}, traj, lookahead, cfg);
        },
        py::arg("x"), py::arg("y"), py::arg("heading"), py::arg("traj"),
        py::arg("lookahead"), py::arg("cfg"));

  py::class_<ap::VehicleState>(m, "VehicleState")
      .def(py::init<double, double, double, double>(), py::arg("x") = 0.0,
           py::arg("y") = 0.0, py::arg("heading") = 0.0, py::arg("v") = 0.0)
      .def_readwrite("x", &ap::VehicleState::x)
      .def_readwrite("y", &ap::VehicleState::y)
      .def_readwrite("heading", &ap::VehicleState::heading)
      .def_readwrite("v", &ap::VehicleState::v);
  m.def("step", &ap::Step, py::arg("state"), py::arg("steering"), py::arg("v_cmd"),
        py::arg("dt"), py::arg("cfg"));

  py::class_<ap::LookaheadSchedule>(m, "LookaheadSchedule")
      .def_static("fixed", &ap::LookaheadSchedule::Fixed, py::arg("lookahead"))
      .def_static("per_waypoint", &ap::LookaheadSchedule::PerWaypoint, py::arg("lookaheads"))
      .def_property_readonly("is_fixed", &ap::LookaheadSchedule::is_fixed);

  py::class_<ap::TraceRow>(m, "TraceRow")
      .def_readonly("t", &ap::TraceRow::t)
      .def_readonly("state", &ap::TraceRow::state)
      .def_readonly("steering", &ap::TraceRow::steering)
      .def_readonly("lookahead", &ap::TraceRow::lookahead);

  py::class_<ap::LapResult>(m, "LapResult")
      .def_property_readonly("status",
                             [](const ap::LapResult& r) { return std::string(ap::ToString(r.status)); })
      .def_property_readonly("completed", &ap::LapResult::completed)
      .def_readonly("lap_time", &ap::LapResult::lap_time)
      .def_readonly("avg_speed", &ap::LapResult::avg_speed)
      .def_readonly("total_deviation", &ap::LapResult::total_deviation)
      .def_readonly("max_deviation", &ap::LapResult::max_deviation)
      .def_readonly("distance", &ap::LapResult::distance)
      .def_readonly("trace", &ap::LapResult::trace)
      .def("metrics_json", &ap::MetricsJson);

  py::class_<ap::GammaOutcome>(m, "GammaOutcome")
      .def(py::init([](double v_exit, double delta) { return ap::GammaOutcome{v_exit, delta, false}; }),
           py::arg("v_exit"), py::arg("delta"))
      .def_readonly("v_exit", &ap::GammaOutcome::v_exit)
      .def_readonly("delta", &ap::GammaOutcome::delta)
      .def_readonly("dnf", &ap::GammaOutcome::dnf);

  m.def("simulate_lap", &ap::SimulateLap, py::arg("traj"), py::arg("schedule"),
        py::arg("cfg"), py::arg("sim"), py::arg("record_trace") = true);
  m.def("on_path_entry_state", &ap::OnPathEntryState, py::arg("traj"), py::arg("index"),
        py::arg("lookahead"), py::arg("cfg"));
  m.def("evaluate_gamma", &ap::EvaluateGamma, py::arg("traj"), py::arg("index"),
        py::arg("lookahead"), py::arg("entry"), py::arg("cfg"), py::arg("sim"));

  py::class_<ap::LookaheadSet>(m, "LookaheadSet")
      .def(py::init<>())
      .def(py::init<std::vector<double>>(), py::arg("labels"))
      .def("__len__", &ap::LookaheadSet::size)
      .def_property_readonly("labels", &ap::LookaheadSet::labels);

  py::class_<ap::LabelAssignment>(m, "LabelAssignment")
      .def(py::init<>())
      .def_readwrite("label_index", &ap::LabelAssignment::label_index)
      .def_readwrite("beta", &ap::LabelAssignment::beta)
      .def_readonly("scores", &ap::LabelAssignment::scores)
      .def("to_schedule", &ap::LabelAssignment::ToSchedule, py::arg("lset"));

  m.def("score_waypoint",
        [](const std::vector<ap::GammaOutcome>& outcomes, double beta) {
          const ap::WaypointScore s = ap::ScoreWaypoint(outcomes, beta);
          return std::make_pair(s.scores, s.best);
        },
        py::arg("outcomes"), py::arg("beta"));
  m.def("assign_labels", &ap::AssignLabels, py::arg("traj"), py::arg("lset"),
        py::arg("beta"), py::arg("cfg"), py::arg("sim"), py::arg("threads") = 1u);
  m.def("smooth_labels", &ap::SmoothLabels, py::arg("assignment"), py::arg("min_run"));

  py::class_<ap::SweepRow>(m, "SweepRow")
      .def_readonly("beta", &ap::SweepRow::beta)
      .def_readonly("assignment", &ap::SweepRow::assignment)
      .def_readonly("lap", &ap::SweepRow::lap);
  m.def("sweep_beta",
        [](const ap::Trajectory& traj, const ap::LookaheadSet& lset,
           const std::vector<double>& betas, const ap::ControllerConfig& cfg,
           const ap::SimConfig& sim, std::size_t min_run, unsigned threads) {
          ap::SweepOptions opts;
          opts.min_run = min_run;
          opts.threads = threads;
          return ap::SweepBeta(traj, lset, betas, cfg, sim, opts);
        },
        py::arg("traj"), py::arg("lset"), py::arg("betas"), py::arg("cfg"), py::arg("sim"),
        py::arg("min_run") = 3, py::arg("threads") = 1u);
  m.def("sweep_report_csv",
        [](const std::vector<ap::SweepRow>& rows) { return ap::SweepReportCsv(rows); });

  py::class_<ap::Improvement>(m, "Improvement")
      .def_readonly("lap_time_pct", &ap::Improvement::lap_time_pct)
      .def_readonly("avg_speed_pct", &ap::Improvement::avg_speed_pct)
      .def_readonly("total_deviation_pct", &ap::Improvement::total_deviation_pct)
      .def_readonly("max_deviation_pct", &ap::Improvement::max_deviation_pct);
  py::class_<ap::BaselineReport>(m, "BaselineReport")
      .def_readonly("adaptive", &ap::BaselineReport::adaptive)
      .def_readonly("fixed", &ap::BaselineReport::fixed)
      .def_readonly("baseline_label", &ap::BaselineReport::baseline_label)
      .def_readonly("improvement", &ap::BaselineReport::improvement);
  m.def("compare_to_baseline", &ap::CompareToBaseline, py::arg("traj"), py::arg("lset"),
        py::arg("assignment"), py::arg("cfg"), py::arg("sim"), py::arg("threads") = 1u);

  m.def("gen_track",
        [](const std::string& shape, std::optional<double> radius,
           std::optional<double> straight, std::optional<double> spacing) {
          const auto parsed = ap::ParseTrackShape(shape);
          if (!parsed) throw py::value_error("unknown track shape '" + shape + "'");
          ap::TrackParams params = ap::TrackParams::DefaultsFor(*parsed);
          if (radius) params.radius = *radius;
          if (straight) params.straight_length = *straight;
          if (spacing) params.spacing = *spacing;
          return ap::GenerateTrack(*parsed, params);
        },
        py::arg("shape"), py::arg("radius") = py::none(), py::arg("straight") = py::none(),
        py::arg("spacing") = py::none());

  m.def("load_track_csv", &ap::LoadTrackCsv, py::arg("path"));
  m.def("save_track_csv", &ap::SaveTrackCsv, py::arg("path"), py::arg("traj"));
  m.def("save_labels_csv", &ap::SaveLabelsCsv, py::arg("path"), py::arg("traj"),
        py::arg("assignment"), py::arg("lset"));
  m.def("load_labels_csv", &ap::LoadLabelsCsv, py::arg("path"), py::arg("traj"),
        py::arg("lset"));
  m.def("save_trace_csv",
        [](const std::filesystem::path& path, const ap::LapResult& lap) {
          ap::SaveTraceCsv(path, lap.trace);
        },
        py::arg("path"), py::arg("lap"));
  m.def("emit_label_svg", &ap::EmitLabelSvg, py::arg("path"), py::arg("traj"),
        py::arg("assignment"), py::arg("lset"));

#ifdef VERSION_INFO
  m.attr("__version__") = VERSION_INFO;
#else
  m.attr("__version__") = "dev";
#endif
}
