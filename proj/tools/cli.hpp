// Copyright 2026 The mcxsynth Authors
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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>

namespace mcx::cli {

struct CommandConfig {
  std::string subcommand;
  /// Empty means every variant (cost only).
  std::string variant;
  int n = 0;
  std::optional<int> supports;
  std::string mask;
  std::string coupling;
  std::string dims;
  std::string router = "auto";
  std::string input;
  std::string output;
  std::string format = "qasm";
  std::string grid;
  int bits = 0;
  int controls = 0;
  std::uint64_t sample_budget = 100000;
};

/// Exit codes for run().
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kUsage = 2;

/// Returns -1 to continue, otherwise the exit code (help or a usage
/// error, diagnostic already printed).
int parse(int argc, char** argv, CommandConfig& cfg, std::ostream& out, std::ostream& err);

/// Mutually required flags; throws mcx::Error on violation.
void validate(const CommandConfig& cfg);

int run(const CommandConfig& cfg, std::ostream& out, std::ostream& err);

/// "3..30" or "7".
std::pair<int, int> parse_range(const std::string& text);

}  // namespace mcx::cli
