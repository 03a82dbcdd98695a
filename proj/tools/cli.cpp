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

#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "adaptive_pursuit/config.hpp"
#include "adaptive_pursuit/error.hpp"
#include "adaptive_pursuit/io.hpp"
#include "adaptive_pursuit/optimizer.hpp"
#include "adaptive_pursuit/simulator.hpp"
#include "adaptive_pursuit/svg.hpp"
#include "adaptive_pursuit/tracks.hpp"

namespace adaptive_pursuit::cli {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  // Shared.
  std::string config_path;
  std::vector<std::string> overrides;
  std::string lookaheads;
  std::optional<unsigned> threads;
  bool dump_config = false;

  std::string track;
  std::string labels;
  std::optional<double> lookahead;
  std::string out;
  std::string trace;
  bool fail_on_dnf = false;

  // gen-track
  std::string shape = "hairpin_circuit";
  std::optional<double> radius;
  std::optional<double> straight;
  std::optional<double> spacing;

  // assign / sweep
  std::optional<double> beta;
  std::string betas;
  std::optional<std::size_t> min_run;
  std::string labels_out;
  std::string report;
  std::string svg_out;
};

RunConfig ResolveConfig(const Options& opt) {
  RunConfig cfg;
  if (!opt.config_path.empty()) {
    std::ifstream in(opt.config_path);
    if (!in) throw Error(ErrorCode::kIoError, "cannot open " + opt.config_path);
    ApplyRunConfig(in, cfg);
  }
  for (const std::string& kv : opt.overrides) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw UsageError("--set expects key=value, got '" + kv + "'");
    cfg.Set(kv.substr(0, eq), kv.substr(eq + 1));
  }
  if (!opt.lookaheads.empty()) cfg.lookaheads = LookaheadSet(ParseDoubleList(opt.lookaheads));
  if (!opt.betas.empty()) cfg.betas = ParseDoubleList(opt.betas);
  if (opt.min_run) cfg.min_run = *opt.min_run;
  if (opt.threads) cfg.threads = *opt.threads;
  cfg.Validate();
  return cfg;
}

void Emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
  } else {
    WriteTextFile(path, text);
  }
}

Trajectory RequireTrack(const Options& opt) {
  if (opt.track.empty()) throw UsageError("--track is required");
  return LoadTrackCsv(opt.track);
}

int GenTrack(const Options& opt, std::ostream& out) {
  const auto shape = ParseTrackShape(opt.shape);
  if (!shape) throw UsageError("unknown shape '" + opt.shape + "'");
  TrackParams params = TrackParams::DefaultsFor(*shape);
  if (opt.radius) params.radius = *opt.radius;
  if (opt.straight) params.straight_length = *opt.straight;
  if (opt.spacing) params.spacing = *opt.spacing;
  const Trajectory traj = GenerateTrack(*shape, params);
  Emit(opt.out, TrackCsv(traj), out);
  return kExitOk;
}

int Simulate(const Options& opt, const RunConfig& cfg, std::ostream& out) {
  if (opt.lookahead.has_value() == !opt.labels.empty()) {
    throw UsageError("simulate needs exactly one of --lookahead or --labels");
  }
  const Trajectory traj = RequireTrack(opt);
  const LookaheadSchedule schedule =
      opt.lookahead ? LookaheadSchedule::Fixed(*opt.lookahead)
                    : LoadLabelsCsv(opt.labels, traj, cfg.lookaheads).ToSchedule(cfg.lookaheads);
  const LapResult lap =
      SimulateLap(traj, schedule, cfg.controller, cfg.sim, !opt.trace.empty());
  const std::string metrics = MetricsJson(lap);
  out << metrics;
  if (!opt.out.empty()) WriteTextFile(opt.out, metrics);
  if (!opt.trace.empty()) SaveTraceCsv(opt.trace, lap.trace);
  return opt.fail_on_dnf && !lap.completed() ? kExitDnf : kExitOk;
}

int Assign(const Options& opt, const RunConfig& cfg, std::ostream& out) {
  if (!opt.beta) throw UsageError("assign needs --beta");
  const Trajectory traj = RequireTrack(opt);
  const LabelAssignment raw =
      AssignLabels(traj, cfg.lookaheads, *opt.beta, cfg.controller, cfg.sim, cfg.threads);
  const LabelAssignment smoothed = SmoothLabels(raw, cfg.min_run);
  Emit(opt.labels_out, LabelsCsv(traj, smoothed, cfg.lookaheads), out);
  return kExitOk;
}

int Sweep(const Options& opt, const RunConfig& cfg, std::ostream& out) {
  const Trajectory traj = RequireTrack(opt);
  SweepOptions sweep_opts;
  sweep_opts.min_run = cfg.min_run;
  sweep_opts.threads = cfg.threads;
  const std::vector<SweepRow> rows =
      SweepBeta(traj, cfg.lookaheads, cfg.betas, cfg.controller, cfg.sim, sweep_opts);
  const bool json = std::filesystem::path(opt.report).extension() == ".json";
  Emit(opt.report, json ? SweepReportJson(rows) : SweepReportCsv(rows), out);
  if (!opt.labels_out.empty()) {
    // Labels of the fastest completed row.
    if (const auto best = BestRow(rows)) {
      SaveLabelsCsv(opt.labels_out, traj, rows[*best].assignment, cfg.lookaheads);
    }
  }
  return kExitOk;
}

int Compare(const Options& opt, const RunConfig& cfg, std::ostream& out) {
  if (opt.labels.empty()) throw UsageError("compare needs --labels");
  const Trajectory traj = RequireTrack(opt);
  const LabelAssignment labels = LoadLabelsCsv(opt.labels, traj, cfg.lookaheads);
  const BaselineReport report = CompareToBaseline(traj, cfg.lookaheads, labels,
                                                  cfg.controller, cfg.sim, cfg.threads);
  Emit(opt.report, CompareReportJson(report, cfg.lookaheads), out);
  return opt.fail_on_dnf && !report.adaptive.completed() ? kExitDnf : kExitOk;
}

int Plot(const Options& opt, const RunConfig& cfg, std::ostream& out) {
  if (opt.labels.empty()) throw UsageError("plot needs --labels");
  const Trajectory traj = RequireTrack(opt);
  const LabelAssignment labels = LoadLabelsCsv(opt.labels, traj, cfg.lookaheads);
  Emit(opt.svg_out, RenderLabelSvg(traj, labels, cfg.lookaheads), out);
  return kExitOk;
}

}  // namespace

int Run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Adaptive-lookahead pure-pursuit lap simulator and label optimizer",
               "adaptive_pursuit"};
  app.fallthrough();
  app.add_option("--config", opt.config_path, "key = value config file")
      ->check(CLI::ExistingFile);
  app.add_option("--set", opt.overrides, "override one config key (key=value)");
  app.add_option("--lookaheads", opt.lookaheads, "comma-separated lookahead labels [m]");
  app.add_option("--threads", opt.threads, "worker threads for gamma evaluation and sweeps");
  app.add_option("--min-run", opt.min_run, "label smoothing run length (1 disables)");
  app.add_flag("--dump-config", opt.dump_config, "print the resolved configuration and exit");

  auto* gen = app.add_subcommand("gen-track", "write a synthetic track CSV");
  gen->add_option("--shape", opt.shape, "circle | oval | hairpin_circuit");
  gen->add_option("--radius", opt.radius, "circle or turn radius [m]");
  gen->add_option("--straight", opt.straight, "straight length [m]");
  gen->add_option("--spacing", opt.spacing, "waypoint spacing [m]");
  gen->add_option("--out", opt.out, "output path (stdout if omitted)");

  auto* sim = app.add_subcommand("simulate", "run one closed-loop lap");
  sim->add_option("--track", opt.track, "track CSV")->required();
  auto* fixed_opt = sim->add_option("--lookahead", opt.lookahead, "fixed lookahead [m]");
  auto* labels_opt = sim->add_option("--labels", opt.labels, "per-waypoint labels CSV");
  fixed_opt->excludes(labels_opt);
  sim->add_option("--out", opt.out, "also write metrics JSON here");
  sim->add_option("--trace", opt.trace, "write the trace CSV here");
  sim->add_flag("--fail-on-dnf", opt.fail_on_dnf, "exit 2 if the lap does not complete");

  auto* assign = app.add_subcommand("assign", "assign a lookahead label to every waypoint");
  assign->add_option("--track", opt.track, "track CSV")->required();
  assign->add_option("--beta", opt.beta, "velocity/deviation trade-off in [0, 1]")->required();
  assign->add_option("--labels-out", opt.labels_out, "labels CSV (stdout if omitted)");

  auto* sweep = app.add_subcommand("sweep", "assign and lap-simulate for several betas");
  sweep->add_option("--track", opt.track, "track CSV")->required();
  sweep->add_option("--betas", opt.betas, "comma-separated betas");
  sweep->add_option("--report", opt.report, "report path, .csv or .json (stdout CSV if omitted)");
  sweep->add_option("--labels-out", opt.labels_out, "labels CSV of the fastest row");

  auto* compare = app.add_subcommand("compare", "adaptive labels vs every fixed lookahead");
  compare->add_option("--track", opt.track, "track CSV")->required();
  compare->add_option("--labels", opt.labels, "labels CSV")->required();
  compare->add_option("--report", opt.report, "report JSON (stdout if omitted)");
  compare->add_flag("--fail-on-dnf", opt.fail_on_dnf, "exit 2 if the adaptive lap does not complete");

  auto* plot = app.add_subcommand("plot", "draw the label assignment as SVG");
  plot->add_option("--track", opt.track, "track CSV")->required();
  plot->add_option("--labels", opt.labels, "labels CSV")->required();
  plot->add_option("--svg-out", opt.svg_out, "SVG path (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    const RunConfig cfg = ResolveConfig(opt);
    if (opt.dump_config) {
      out << DumpRunConfig(cfg);
      return kExitOk;
    }
    if (gen->parsed()) return GenTrack(opt, out);
    if (sim->parsed()) return Simulate(opt, cfg, out);
    if (assign->parsed()) return Assign(opt, cfg, out);
    if (sweep->parsed()) return Sweep(opt, cfg, out);
    if (compare->parsed()) return Compare(opt, cfg, out);
    if (plot->parsed()) return Plot(opt, cfg, out);
    err << "error: a subcommand is required\n" << app.help();
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace adaptive_pursuit::cli
