//
// Copyright 2026 The privconn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#ifndef PRIVCONN_CLI_H_
#define PRIVCONN_CLI_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "privconn/report.h"
#include "privconn/scale_solver.h"

namespace privconn {

enum class Subcommand {
  kPrivatize,
  kSolveB,
  kConsensus,
  kBounds,
  kValidate,
  kAttackDemo,
};

std::string_view SubcommandName(Subcommand s);
absl::StatusOr<Subcommand> ParseSubcommand(std::string_view name);

enum ExitCode : int {
  kExitOk = 0,
  kExitIo = 1,
  kExitParse = 2,
  kExitInfeasible = 3,
  kExitNumerical = 4,
  kExitAuditFailed = 5,
};

// NotFound -> I/O, InvalidArgument / OutOfRange -> parse, FailedPrecondition
// -> infeasible, anything else -> numerical.
int ExitCodeForStatus(const absl::Status& status);

// "start:stop:points" with an optional ":log" suffix for geometric spacing.
struct GridSpec {
  double start = 0.0;
  double stop = 0.0;
  int points = 0;
  bool log_spaced = false;

  std::vector<double> Values() const;
};

absl::StatusOr<GridSpec> ParseGridSpec(std::string_view text);
absl::StatusOr<std::optional<double>> ParseAlpha(std::string_view text);

enum class OutputFormat { kJson, kCsv };

inline constexpr std::string_view kDefaultTGrid = "0.05:1000:50:log";

struct RunConfig {
  Subcommand subcommand = Subcommand::kSolveB;
  // Edge-list file; its lambda2 / lambda_n / n take precedence over flags.
  std::string input_path;
  PrivacyParams params;
  uint64_t seed = 1;
  std::optional<int> n;
  std::optional<double> lambda2;
  std::optional<double> lambda_n;
  // Overrides the solved scale.
  std::optional<double> b;
  GridSpec t_grid = {0.05, 1000.0, 50, true};
  std::optional<GridSpec> sweep_eps;
  double a = 0.2;
  double eta = 0.1;
  std::optional<double> alpha;
  // validate: "all", "sensitivity", "dp", "concentration", "expectations".
  std::string audit = "all";
  // validate: Monte Carlo size per graph or grid point.
  int64_t trials = 100'000;
  OutputFormat format = OutputFormat::kJson;
  std::string output_path = "-";
};

// Precondition checks on every numeric flag.
absl::Status ValidateConfig(const RunConfig& config);

struct RunResult {
  int exit_code = kExitOk;
  // Full output: a JSON report (also on failure, with an error record) or a
  // CSV table.
  std::string output;
  std::string error_message;
};

// Dispatches without touching the output destination. `generated_at` fills
// the report timestamp.
RunResult Execute(const RunConfig& config, std::string_view generated_at);

// Execute with the current time, then writes to config.output_path ("-" is
// stdout). Error messages go to stderr. Returns the exit code.
int Run(const RunConfig& config);

}  // namespace privconn

#endif  // PRIVCONN_CLI_H_
