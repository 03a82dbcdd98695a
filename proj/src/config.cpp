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

#include "adaptive_pursuit/config.hpp"

#include <charconv>
#include <fstream>
#include <string>

#include "adaptive_pursuit/error.hpp"
#include "adaptive_pursuit/io.hpp"

namespace adaptive_pursuit {
namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double ToDouble(std::string_view text) {
  text = Trim(text);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::kParseError, "malformed number '" + std::string(text) + "'");
  }
  return value;
}

std::size_t ToIndex(std::string_view text) {
  text = Trim(text);
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::kParseError, "malformed integer '" + std::string(text) + "'");
  }
  return value;
}

std::string JoinList(const std::vector<double>& values) {
  std::string out;
  for (double v : values) out += (out.empty() ? "" : ",") + FormatDouble(v);
  return out;
}

}  // namespace

std::vector<double> ParseDoubleList(std::string_view text) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    out.push_back(ToDouble(text.substr(pos, comma - pos)));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

void RunConfig::Validate() const {
  controller.Validate();
  sim.Validate();
  for (double b : betas) {
    if (!(b >= 0.0 && b <= 1.0)) {
      throw Error(ErrorCode::kBetaOutOfRange, "beta " + FormatDouble(b) + " outside [0, 1]");
    }
  }
  if (min_run == 0) throw Error(ErrorCode::kInvalidConfig, "min_run must be >= 1");
  if (threads == 0) throw Error(ErrorCode::kInvalidConfig, "threads must be >= 1");
}

void RunConfig::Set(std::string_view key, std::string_view value) {
  if (key == "wheelbase") controller.wheelbase = ToDouble(value);
  else if (key == "max_steer") controller.max_steer = ToDouble(value);
  else if (key == "v_min") controller.v_min = ToDouble(value);
  else if (key == "v_max") controller.v_max = ToDouble(value);
  else if (key == "accel_limit") controller.accel_limit = ToDouble(value);
  else if (key == "l_min") controller.l_min = ToDouble(value);
  else if (key == "l_max") controller.l_max = ToDouble(value);
  else if (key == "dt") sim.dt = ToDouble(value);
  else if (key == "max_sim_time") sim.max_sim_time = ToDouble(value);
  else if (key == "dnf_deviation") sim.dnf_deviation = ToDouble(value);
  else if (key == "gamma_horizon") sim.gamma_horizon = ToIndex(value);
  else if (key == "start_index") sim.start_index = ToIndex(value);
  else if (key == "lookaheads") lookaheads = LookaheadSet(ParseDoubleList(value));
  else if (key == "betas") betas = ParseDoubleList(value);
  else if (key == "min_run") min_run = ToIndex(value);
  else if (key == "threads") threads = static_cast<unsigned>(ToIndex(value));
  else throw Error(ErrorCode::kParseError, "unknown config key '" + std::string(key) + "'");
}

void ApplyRunConfig(std::istream& in, RunConfig& base) {
  std::string text;
  std::size_t line_no = 0;
  while (std::getline(in, text)) {
    ++line_no;
    std::string_view line = text;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = Trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::kParseError,
                  "line " + std::to_string(line_no) + ": expected key = value", line_no);
    }
    try {
      base.Set(Trim(line.substr(0, eq)), Trim(line.substr(eq + 1)));
    } catch (const Error& e) {
      throw Error(ErrorCode::kParseError,
                  "line " + std::to_string(line_no) + ": " + e.what(), line_no);
    }
  }
}

RunConfig ParseRunConfig(std::istream& in) {
  RunConfig cfg;
  ApplyRunConfig(in, cfg);
  cfg.Validate();
  return cfg;
}

RunConfig LoadRunConfig(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  return ParseRunConfig(in);
}

std::string DumpRunConfig(const RunConfig& cfg) {
  std::string out;
  auto put = [&out](std::string_view key, const std::string& value) {
    out += std::string(key) + " = " + value + "\n";
  };
  put("wheelbase", FormatDouble(cfg.controller.wheelbase));
  put("max_steer", FormatDouble(cfg.controller.max_steer));
  put("v_min", FormatDouble(cfg.controller.v_min));
  put("v_max", FormatDouble(cfg.controller.v_max));
  put("accel_limit", FormatDouble(cfg.controller.accel_limit));
  put("l_min", FormatDouble(cfg.controller.l_min));
  put("l_max", FormatDouble(cfg.controller.l_max));
  put("dt", FormatDouble(cfg.sim.dt));
  put("max_sim_time", FormatDouble(cfg.sim.max_sim_time));
  put("dnf_deviation", FormatDouble(cfg.sim.dnf_deviation));
  put("gamma_horizon", std::to_string(cfg.sim.gamma_horizon));
  put("start_index", std::to_string(cfg.sim.start_index));
  put("lookaheads", JoinList(cfg.lookaheads.labels()));
  put("betas", JoinList(cfg.betas));
  put("min_run", std::to_string(cfg.min_run));
  put("threads", std::to_string(cfg.threads));
  return out;
}

}  // namespace adaptive_pursuit
