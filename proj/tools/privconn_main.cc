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

// Command-line front end: flag parsing only, everything else is in
// privconn::Run.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "privconn/cli.h"

namespace {

struct RawFlags {
  double epsilon = 0.4;
  double delta = 0.05;
  int adjacency = 1;
  uint64_t seed = 1;
  std::optional<int> n;
  std::optional<double> lambda2;
  std::optional<double> lambda_n;
  std::optional<double> b;
  double a = 0.2;
  double eta = 0.1;
  std::string t_grid{privconn::kDefaultTGrid};
  std::string sweep_eps;
  std::string alpha = "auto";
  std::string format = "json";
  std::string output = "-";
  std::string input;
  std::string audit = "all";
  int64_t trials = 100'000;
};

void AddFlags(CLI::App* cmd, RawFlags& f) {
  cmd->add_option("--input", f.input, "edge-list file (n=<int> header)");
  cmd->add_option("--eps", f.epsilon, "privacy epsilon")->capture_default_str();
  cmd->add_option("--delta", f.delta, "privacy delta")->capture_default_str();
  cmd->add_option("--A", f.adjacency, "adjacency: max differing edges")
      ->capture_default_str();
  cmd->add_option("--seed", f.seed, "random seed")->capture_default_str();
  cmd->add_option("--n", f.n, "number of nodes");
  cmd->add_option("--lambda2", f.lambda2, "lambda2 when no graph is given");
  cmd->add_option("--lambda-n", f.lambda_n, "largest Laplacian eigenvalue");
  cmd->add_option("--b", f.b, "use this noise scale instead of solving");
  cmd->add_option("--a", f.a, "rate error threshold")->capture_default_str();
  cmd->add_option("--eta", f.eta, "target probability for settle time")
      ->capture_default_str();
  cmd->add_option("--t-grid", f.t_grid, "start:stop:points[:log]")
      ->capture_default_str();
  cmd->add_option("--sweep-eps", f.sweep_eps, "start:stop:points[:log]");
  cmd->add_option("--alpha", f.alpha, "auto or a value > 1")
      ->capture_default_str();
  cmd->add_option("--format", f.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  cmd->add_option("--output", f.output, "output path, - for stdout")
      ->capture_default_str();
  cmd->add_option("--audit", f.audit,
                  "all, sensitivity, dp, concentration or expectations")
      ->capture_default_str();
  cmd->add_option("--trials", f.trials, "Monte Carlo samples per case")
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Private algebraic connectivity release and analysis"};
  app.require_subcommand(1);
  RawFlags flags;
  const char* kCommands[][2] = {
      {"privatize", "release lambda2 of a graph under edge DP"},
      {"solve-b", "solve the bounded Laplace scale"},
      {"consensus", "consensus rate error bounds and settle times"},
      {"bounds", "diameter and mean distance bounds"},
      {"validate", "run the statistical audits"},
      {"attack-demo", "reconstruction attacks on an exact lambda2"},
  };
  for (const auto& [name, help] : kCommands) AddFlags(app.add_subcommand(name, help), flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? privconn::kExitOk : privconn::kExitParse;
  }

  privconn::RunConfig config;
  const std::string name = app.get_subcommands().front()->get_name();
  auto fail = [](const absl::Status& status) {
    std::cerr << "privconn: " << status.message() << "\n";
    return privconn::ExitCodeForStatus(status);
  };
  absl::StatusOr<privconn::Subcommand> sub = privconn::ParseSubcommand(name);
  if (!sub.ok()) return fail(sub.status());
  config.subcommand = *sub;
  config.input_path = flags.input;
  config.params = {flags.epsilon, flags.delta, flags.adjacency};
  config.seed = flags.seed;
  config.n = flags.n;
  config.lambda2 = flags.lambda2;
  config.lambda_n = flags.lambda_n;
  config.b = flags.b;
  config.a = flags.a;
  config.eta = flags.eta;
  config.audit = flags.audit;
  config.trials = flags.trials;
  config.output_path = flags.output;
  config.format = flags.format == "csv" ? privconn::OutputFormat::kCsv
                                        : privconn::OutputFormat::kJson;
  absl::StatusOr<privconn::GridSpec> grid = privconn::ParseGridSpec(flags.t_grid);
  if (!grid.ok()) return fail(grid.status());
  config.t_grid = *grid;
  if (!flags.sweep_eps.empty()) {
    absl::StatusOr<privconn::GridSpec> sweep =
        privconn::ParseGridSpec(flags.sweep_eps);
    if (!sweep.ok()) return fail(sweep.status());
    config.sweep_eps = *sweep;
  }
  absl::StatusOr<std::optional<double>> alpha = privconn::ParseAlpha(flags.alpha);
  if (!alpha.ok()) return fail(alpha.status());
  config.alpha = *alpha;
  return privconn::Run(config);
}
