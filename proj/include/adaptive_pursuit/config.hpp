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
#include <filesystem>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "adaptive_pursuit/controller.hpp"
#include "adaptive_pursuit/optimizer.hpp"
#include "adaptive_pursuit/simulator.hpp"

namespace adaptive_pursuit {

/// Everything a CLI run needs. Nothing in the core paths is random.
///
/// File format: one `key = value` per line, `#` starts a comment, blank lines
/// are ignored. Keys:
///
///   wheelbase, max_steer, v_min, v_max, accel_limit, l_min, l_max
///   dt, max_sim_time, dnf_deviation, gamma_horizon, start_index
///   lookaheads   (comma list, strictly increasing)
///   betas        (comma list, each in [0, 1])
///   min_run, threads
struct RunConfig {
  ControllerConfig controller;
  SimConfig sim;
  LookaheadSet lookaheads;
  std::vector<double> betas{0.0, 0.25, 0.5, 0.75, 1.0};
  std::size_t min_run = 3;
  unsigned threads = 1;

  /// Throws kInvalidConfig (or the constituent types' errors).
  void Validate() const;

  /// Sets one key from its text value. Throws kParseError on an unknown key
  /// or malformed value.
  void Set(std::string_view key, std::string_view value);
};

/// Defaults overlaid with the stream's keys, then validated.
RunConfig ParseRunConfig(std::istream& in);
RunConfig LoadRunConfig(const std::filesystem::path& path);

/// Applies a file's keys on top of `base` without validating the result.
void ApplyRunConfig(std::istream& in, RunConfig& base);

/// Fully resolved config in the file format, keys in a fixed order.
std::string DumpRunConfig(const RunConfig& cfg);

/// Parses "0,0.25,0.5" style lists.
std::vector<double> ParseDoubleList(std::string_view text);

}  // namespace adaptive_pursuit
