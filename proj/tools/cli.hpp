/**
 * Copyright 2026 The biqutrit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Command-line front end: reproducible `state`, `partner` and `sweep` runs,
// driven by flags or by a JSON config with the same field names.

#ifndef BIQUTRIT_TOOLS_CLI_HPP
#define BIQUTRIT_TOOLS_CLI_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "biqutrit/experiment.hpp"

namespace biqutrit::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kParseError = 2,
  kDegenerate = 3,
  kIoError = 4,
};

/// Environment variable naming the directory for relative output paths.
inline constexpr const char* kOutputDirEnv = "BIQUTRIT_OUTPUT_DIR";

struct RunConfig {
  std::string command;  // "state", "partner" or "sweep"

  // state
  std::optional<double> chi;
  std::optional<double> dphi;
  std::optional<std::array<Complex, 3>> amplitudes;

  // partner
  std::vector<std::string> points;
  bool globe = false;

  // sweep
  std::string kind = "chi";  // "chi" or "polarizer"
  double z1 = 45.0;
  double z2 = 60.0;
  int which = 1;
  std::optional<double> from;
  std::optional<double> to;
  double step = 0.5;
  std::optional<std::uint64_t> seed;
  double duration = 1.0;
  double drift = 0.0;
  RateModel model;

  std::string format;  // text|json for reports, csv|json for sweeps; empty = default
  std::string output;  // empty = stdout
};

void to_json(nlohmann::json& j, const RunConfig& c);
void from_json(const nlohmann::json& j, RunConfig& c);

/// Parses "re" or "re:im".
Complex parse_complex(const std::string& token);

/// Runs a fully specified config. Reports go to `out`, diagnostics to `err`.
int execute(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv (argv[0] is the program name) and executes.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace biqutrit::cli

#endif  // BIQUTRIT_TOOLS_CLI_HPP
