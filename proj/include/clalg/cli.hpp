// Copyright 2026 The clalg Authors
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

#ifndef CLALG_CLI_HPP_
#define CLALG_CLI_HPP_

#include <string>
#include <vector>

#include "json.hpp"

namespace clalg {

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchemaVersion = 1;

/// Exit codes: 0 every requested check passed, 1 a checked property failed,
/// 2 parse or usage error.
struct CommandResult {
  int exit_code = 0;
  Json report;
  /// What the `cla` tool prints: JSON with --json, text otherwise.
  std::string output;
};

/// argv excludes the program name: {"validate", "ex1.cla", "--json"}.
CommandResult run_command(const std::vector<std::string>& argv);

/// Pure function of a report.
int exit_code_for(const Json& report);

/// Human-readable rendering of a report.
std::string render_text(const Json& report);

}  // namespace clalg

#endif  // CLALG_CLI_HPP_
