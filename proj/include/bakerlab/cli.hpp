// Copyright 2026 The bakerlab Authors
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

// Experiment commands behind the `bakerlab` executable. Each command turns a
// resolved ExperimentConfig into the bytes of its output file, so the same
// code path is used by the CLI and by the tests.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "bakerlab/tensor.hpp"

namespace bakerlab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidConfig = 2;
inline constexpr int kExitNumerical = 3;

enum class Profile { Desk, Paper };

/// Raw command-line settings. Unset optionals take the profile default for
/// the command being run.
struct ExperimentConfig {
  std::string command;
  std::string kind;
  std::string map_path;
  std::int64_t d = 0;
  std::string split;
  std::optional<std::int64_t> n_min;
  std::optional<std::int64_t> n_max;
  std::optional<std::int64_t> states;
  std::optional<std::int64_t> samples;
  std::uint64_t seed = 0;
  int bins = 50;
  std::string profile = "desk";
  bool cross_check = false;
  bool cue_reference = false;
  double tol = 1e-8;
  std::uint64_t budget = 10'000'000;
  std::int64_t exhaustive_limit = 64;
  std::string out;
  std::string raw_out;
};

/// Parses "AxB". Throws InvalidArgument.
Bipartition parse_split(const std::string& text);

std::string version();

std::string cmd_gen_map(const ExperimentConfig& cfg);
std::string cmd_timeseries(const ExperimentConfig& cfg);
/// Writes the raw sample CSV to cfg.raw_out when it is set.
std::string cmd_histogram(const ExperimentConfig& cfg);
std::string cmd_ensemble(const ExperimentConfig& cfg);
std::string cmd_epinf(const ExperimentConfig& cfg);
std::string cmd_spectrum_check(const ExperimentConfig& cfg);

/// Runs cfg.command, writes the result to cfg.out (stdout when empty or "-")
/// and maps failures to exit codes: 2 invalid configuration, 3 numerical
/// precondition failure. Diagnostics go to `err`.
int run(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace bakerlab::cli
