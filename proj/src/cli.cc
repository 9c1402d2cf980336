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

#include "privconn/cli.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"
#include "privconn/attacks.h"
#include "privconn/audits.h"
#include "privconn/bounded_laplace.h"
#include "privconn/consensus.h"
#include "privconn/edge_list.h"
#include "privconn/mechanism.h"
#include "privconn/property_bounds.h"
#include "privconn/random.h"
#include "privconn/spectrum.h"

namespace privconn {
namespace {

constexpr std::pair<Subcommand, std::string_view> kSubcommandNames[] = {
    {Subcommand::kPrivatize, "privatize"},
    {Subcommand::kSolveB, "solve-b"},
    {Subcommand::kConsensus, "consensus"},
    {Subcommand::kBounds, "bounds"},
    {Subcommand::kValidate, "validate"},
    {Subcommand::kAttackDemo, "attack-demo"},
};

// Defaults for analyses run without a graph.
constexpr double kDefaultLambda2 = 1.0;
constexpr int kDefaultAnalysisNodes = 10;
constexpr int kDefaultDpNodes = 5;

absl::string_view ToAbsl(std::string_view s) { return {s.data(), s.size()}; }

// Where lambda2, lambda_n and n come from for one run.
struct GraphFacts {
  std::optional<int> n;
  std::optional<double> lambda2;
  std::optional<double> lambda_n;
  std::string lambda2_source = "none";
};

absl::StatusOr<GraphFacts> ResolveGraph(const RunConfig& config) {
  GraphFacts facts;
  if (!config.input_path.empty()) {
    absl::StatusOr<Graph> g = ReadEdgeListFile(config.input_path);
    if (!g.ok()) return g.status();
    absl::StatusOr<SpectralSummary> spectrum = Spectrum(*g);
    if (!spectrum.ok()) return spectrum.status();
    if (config.n.has_value() && *config.n != g->num_nodes()) {
      return absl::InvalidArgumentError(
          absl::StrCat("--n ", *config.n, " disagrees with the input's n=",
                       g->num_nodes()));
    }
    facts.n = g->num_nodes();
    facts.lambda2 = spectrum->lambda2;
    facts.lambda_n = spectrum->lambda_n;
    facts.lambda2_source = "graph";
    return facts;
  }
  facts.n = config.n;
  if (config.lambda2.has_value()) {
    facts.lambda2 = config.lambda2;
    facts.lambda2_source = "flag";
  }
  if (config.lambda_n.has_value()) facts.lambda_n = config.lambda_n;
  return facts;
}

absl::StatusOr<int> RequireN(const GraphFacts& facts) {
  if (!facts.n.has_value()) {
    return absl::InvalidArgumentError("--n or --input is required");
  }
  return *facts.n;
}

absl::Status CheckLambda2(double lambda2, int n) {
  if (!(lambda2 >= 0.0 && lambda2 <= n)) {
    return absl::InvalidArgumentError(
        absl::StrCat("lambda2 = ", lambda2, " is outside [0, ", n, "]"));
  }
  return absl::OkStatus();
}

Json InputsJson(const RunConfig& config, const GraphFacts& facts) {
  Json j{{"input", config.input_path.empty() ? Json(nullptr)
                                             : Json(config.input_path)},
         {"n", facts.n.has_value() ? Json(*facts.n) : Json(nullptr)}};
  const Json params = ToJson(config.params);
  for (auto& [key, value] : params.items()) j[key] = value;
  j["seed"] = config.seed;
  return j;
}

absl::StatusOr<double> ScaleFor(const RunConfig& config,
                                const PrivacyParams& params, int n) {
  if (config.b.has_value()) return *config.b;
  return SolveScale(params, n);
}

absl::Status RunPrivatize(const RunConfig& config, ReportDocument& doc) {
  absl::StatusOr<GraphFacts> facts = ResolveGraph(config);
  if (!facts.ok()) return facts.status();
  absl::StatusOr<int> n = RequireN(*facts);
  if (!n.ok()) return n.status();
  if (!facts->lambda2.has_value()) {
    return absl::InvalidArgumentError("privatize needs --input or --lambda2");
  }
  if (absl::Status s = CheckLambda2(*facts->lambda2, *n); !s.ok()) return s;
  RandomStream rng(config.seed);
  absl::StatusOr<PrivateRelease> release =
      PrivatizeValue(*facts->lambda2, *n, config.params, rng);
  if (!release.ok()) return release.status();
  doc.inputs = InputsJson(config, *facts);
  doc.public_statistics = Json{{"lambda2_tilde", release->lambda2_tilde},
                               {"b", release->scale_b},
                               {"C", release->normalizer_c},
                               {"n", release->num_nodes}};
  doc.results = Json{{"release", ToJson(*release)}};
  return absl::OkStatus();
}

absl::StatusOr<Table> SolveSweep(const GridSpec& spec,
                                 const PrivacyParams& base, int n) {
  Table table{{"epsilon", "b"}, {}};
  for (double eps : spec.Values()) {
    PrivacyParams p = base;
    p.epsilon = eps;
    if (absl::Status s = p.Validate(); !s.ok()) return s;
    absl::StatusOr<double> b = SolveScale(p, n);
    if (!b.ok()) return b.status();
    table.rows.push_back({eps, *b});
  }
  return table;
}

absl::Status RunSolveB(const RunConfig& config, ReportDocument& doc,
                       std::optional<Table>& table) {
  absl::StatusOr<GraphFacts> facts = ResolveGraph(config);
  if (!facts.ok()) return facts.status();
  absl::StatusOr<int> n = RequireN(*facts);
  if (!n.ok()) return n.status();
  doc.inputs = InputsJson(config, *facts);
  if (config.sweep_eps.has_value()) {
    absl::StatusOr<Table> sweep = SolveSweep(*config.sweep_eps, config.params,
                                             *n);
    if (!sweep.ok()) return sweep.status();
    doc.results = Json{{"sweep", ToJson(*sweep)}};
    table = *std::move(sweep);
    return absl::OkStatus();
  }
  absl::StatusOr<double> b = SolveScale(config.params, *n);
  if (!b.ok()) return b.status();
  absl::StatusOr<double> delta_c = DeltaC(*b, config.params.adjacency, *n);
  if (!delta_c.ok()) return delta_c.status();
  doc.public_statistics = Json{{"b", *b}, {"n", *n}};
  doc.results =
      Json{{"b", *b},
           {"delta_C", *delta_c},
           {"denominator", PrivacyDenominator(*b, config.params, *n)},
           {"slack", ScaleInequalitySlack(*b, config.params, *n)}};
  return absl::OkStatus();
}

absl::Status RunConsensus(const RunConfig& config, ReportDocument& doc,
                          std::optional<Table>& table) {
  absl::StatusOr<GraphFacts> facts = ResolveGraph(config);
  if (!facts.ok()) return facts.status();
  if (!facts->n.has_value()) facts->n = kDefaultAnalysisNodes;
  if (!facts->lambda2.has_value()) {
    facts->lambda2 = kDefaultLambda2;
    facts->lambda2_source = "default";
  }
  const int n = *facts->n;
  const double lambda2 = *facts->lambda2;
  if (absl::Status s = CheckLambda2(lambda2, n); !s.ok()) return s;
  absl::StatusOr<double> b = ScaleFor(config, config.params, n);
  if (!b.ok()) return b.status();

  const std::vector<double> grid = config.t_grid.Values();
  absl::StatusOr<std::vector<BoundCurvePoint>> curve =
      BoundCurve(grid, config.a, lambda2, *b, n);
  if (!curve.ok()) return curve.status();
  const RateErrorQuery query{1.0, config.a, config.eta};
  absl::StatusOr<double> worst = WorstCaseSettleTime(query, *b, n);
  if (!worst.ok()) return worst.status();
  Json settle = nullptr;
  if (lambda2 > 0.0) {
    absl::StatusOr<double> t_star = SettleTime(query, lambda2, *b, n);
    if (!t_star.ok()) return t_star.status();
    settle = *t_star;
  }

  doc.inputs = InputsJson(config, *facts);
  doc.inputs["n"] = n;
  doc.inputs["lambda2_source"] = facts->lambda2_source;
  doc.inputs["a"] = config.a;
  doc.inputs["eta"] = config.eta;
  doc.inputs["b_override"] = config.b.has_value();
  doc.public_statistics = Json{{"b", *b}, {"n", n}};
  Table t{{"t", "bound", "expected_error", "probability_lower_bound"}, {}};
  for (const BoundCurvePoint& p : *curve) {
    t.rows.push_back(
        {p.t, p.bound, p.expected_error, p.probability_lower_bound});
  }
  doc.results = Json{{"lambda2", lambda2},
                     {"settle_time", settle},
                     {"worst_case_settle_time", *worst},
                     {"curve", ToJson(t)}};
  table = std::move(t);
  return absl::OkStatus();
}

const std::vector<std::string> kSweepHeader = {
    "epsilon",          "b",
    "d_lower_exact",    "d_upper_exact",
    "rho_lower_exact",  "rho_upper_exact",
    "d_lower_expected", "d_upper_expected",
    "rho_lower_expected", "rho_upper_expected"};

absl::Status RunBounds(const RunConfig& config, ReportDocument& doc,
                       std::optional<Table>& table) {
  absl::StatusOr<GraphFacts> facts = ResolveGraph(config);
  if (!facts.ok()) return facts.status();
  if (!facts->n.has_value()) facts->n = kDefaultAnalysisNodes;
  if (!facts->lambda2.has_value()) {
    facts->lambda2 = kDefaultLambda2;
    facts->lambda2_source = "default";
  }
  const int n = *facts->n;
  const double lambda2 = *facts->lambda2;
  // Public-only analyses fall back to the universal upper bound.
  const double lambda_n = facts->lambda_n.value_or(n);
  if (absl::Status s = CheckLambda2(lambda2, n); !s.ok()) return s;
  if (!(lambda_n <= n)) {
    return absl::InvalidArgumentError(
        absl::StrCat("lambda_n = ", lambda_n, " exceeds n = ", n));
  }
  absl::StatusOr<PropertyBoundReport> exact =
      ExactBounds(lambda2, lambda_n, n, config.alpha);
  if (!exact.ok()) return exact.status();

  doc.inputs = InputsJson(config, *facts);
  doc.inputs["n"] = n;
  doc.inputs["lambda2_source"] = facts->lambda2_source;
  doc.inputs["lambda_n"] = lambda_n;
  doc.inputs["alpha"] =
      config.alpha.has_value() ? Json(*config.alpha) : Json("auto");

  if (config.sweep_eps.has_value()) {
    Table t{kSweepHeader, {}};
    for (double eps : config.sweep_eps->Values()) {
      PrivacyParams p = config.params;
      p.epsilon = eps;
      if (absl::Status s = p.Validate(); !s.ok()) return s;
      absl::StatusOr<double> b = SolveScale(p, n);
      if (!b.ok()) return b.status();
      absl::StatusOr<PropertyBoundReport> expected =
          ExpectedBounds(lambda2, *b, lambda_n, n, config.alpha);
      if (!expected.ok()) return expected.status();
      t.rows.push_back({eps, *b, exact->d_lower, exact->d_upper,
                        exact->rho_lower, exact->rho_upper, expected->d_lower,
                        expected->d_upper, expected->rho_lower,
                        expected->rho_upper});
    }
    doc.results = Json{{"exact", ToJson(*exact)}, {"sweep", ToJson(t)}};
    table = std::move(t);
    return absl::OkStatus();
  }

  absl::StatusOr<double> b = ScaleFor(config, config.params, n);
  if (!b.ok()) return b.status();
  absl::StatusOr<PropertyBoundReport> expected =
      ExpectedBounds(lambda2, *b, lambda_n, n, config.alpha);
  if (!expected.ok()) return expected.status();
  doc.public_statistics = Json{{"b", *b}, {"n", n}};
  doc.results = Json{{"exact", ToJson(*exact)},
                     {"expected", ToJson(*expected)},
                     {"min_degree_lower_bound", MinDegreeInference(lambda2, n)}};
  return absl::OkStatus();
}

bool Wants(const RunConfig& config, std::string_view audit) {
  return config.audit == "all" || config.audit == audit;
}

absl::Status RunValidate(const RunConfig& config, ReportDocument& doc,
                         bool& all_passed) {
  if (config.audit != "all" && config.audit != "sensitivity" &&
      config.audit != "dp" && config.audit != "concentration" &&
      config.audit != "expectations") {
    return absl::InvalidArgumentError(
        absl::StrCat("unknown audit '", config.audit, "'"));
  }
  Json audits = Json::array();
  all_passed = true;
  auto record = [&](const AuditReport& report, bool expect_pass) {
    Json j = ToJson(report);
    j["expected_to_pass"] = expect_pass;
    j["as_expected"] = report.passed == expect_pass;
    all_passed = all_passed && report.passed == expect_pass;
    audits.push_back(std::move(j));
  };

  if (Wants(config, "sensitivity")) {
    std::vector<int> sizes = {4, 5};
    if (config.n.has_value()) sizes = {*config.n};
    for (int n : sizes) {
      absl::StatusOr<AuditReport> r =
          AuditSensitivity(n, config.params.adjacency);
      if (!r.ok()) return r.status();
      record(*r, true);
    }
  }
  if (Wants(config, "dp")) {
    DpAuditConfig dp;
    dp.n = config.n.value_or(kDefaultDpNodes);
    dp.params = config.params;
    dp.samples_per_graph = config.trials;
    dp.seed = config.seed;
    absl::StatusOr<AuditReport> r = AuditDp(dp);
    if (!r.ok()) return r.status();
    record(*r, true);
    dp.scale_multiplier = 0.5;
    absl::StatusOr<AuditReport> control = AuditDp(dp);
    if (!control.ok()) return control.status();
    control->name = "dp_negative_control";
    record(*control, false);
  }
  const int n = config.n.value_or(kDefaultAnalysisNodes);
  const double lambda2 = config.lambda2.value_or(kDefaultLambda2);
  if (Wants(config, "concentration") || Wants(config, "expectations")) {
    if (absl::Status s = CheckLambda2(lambda2, n); !s.ok()) return s;
    absl::StatusOr<double> b = ScaleFor(config, config.params, n);
    if (!b.ok()) return b.status();
    if (Wants(config, "concentration")) {
      const std::vector<double> grid = config.t_grid.Values();
      absl::StatusOr<ConcentrationAudit> r = AuditConcentration(
          lambda2, *b, n, grid, config.a, config.trials, config.seed);
      if (!r.ok()) return r.status();
      record(r->report, true);
      Json curve = Json::array();
      for (const BoundCurvePoint& p : r->curve) curve.push_back(ToJson(p));
      doc.results["concentration_curve"] = std::move(curve);
    }
    if (Wants(config, "expectations")) {
      absl::StatusOr<AuditReport> r =
          AuditExpectations(lambda2, *b, n, config.trials, config.seed);
      if (!r.ok()) return r.status();
      record(*r, true);
    }
  }
  doc.inputs = Json{{"audit", config.audit},
                    {"trials", config.trials},
                    {"n", config.n.has_value() ? Json(*config.n)
                                               : Json(nullptr)},
                    {"lambda2", lambda2}};
  const Json params = ToJson(config.params);
  for (auto& [key, value] : params.items()) doc.inputs[key] = value;
  doc.inputs["seed"] = config.seed;
  doc.audit = Json{{"passed", all_passed}, {"audits", std::move(audits)}};
  return absl::OkStatus();
}

Json EdgesJson(const std::vector<Edge>& edges) {
  Json j = Json::array();
  for (const auto& [u, v] : edges) j.push_back(Json::array({u, v}));
  return j;
}

absl::Status RunAttackDemo(ReportDocument& doc) {
  Json outcomes = Json::array();
  for (double lambda2 : {2.0, 1.0}) {
    absl::StatusOr<AttackOutcome> out =
        RunAttack(KnownNeighbourhoodScenario(lambda2));
    if (!out.ok()) return out.status();
    Json graphs = Json::array();
    for (const Graph& g : out->consistent) graphs.push_back(EdgesJson(g.edges()));
    outcomes.push_back(
        Json{{"scenario", out->scenario.name},
             {"n", out->scenario.n},
             {"lambda2", lambda2},
             {"known_present", EdgesJson(out->scenario.known_present)},
             {"known_absent", EdgesJson(out->scenario.known_absent)},
             {"candidates", out->candidates},
             {"consistent", std::move(graphs)},
             {"certain_present", EdgesJson(out->certain_present)},
             {"certain_absent", EdgesJson(out->certain_absent)},
             {"min_degree_lower_bound", out->min_degree_lower_bound}});
  }
  doc.inputs = Json{{"tolerance", kDefaultAttackTolerance}};
  doc.results = Json{{"attacks", std::move(outcomes)}};
  return absl::OkStatus();
}

bool SupportsCsv(const RunConfig& config) {
  switch (config.subcommand) {
    case Subcommand::kConsensus:
      return true;
    case Subcommand::kSolveB:
    case Subcommand::kBounds:
      return config.sweep_eps.has_value();
    default:
      return false;
  }
}

}  // namespace

std::string_view SubcommandName(Subcommand s) {
  for (const auto& [value, name] : kSubcommandNames) {
    if (value == s) return name;
  }
  return "unknown";
}

absl::StatusOr<Subcommand> ParseSubcommand(std::string_view name) {
  for (const auto& [value, known] : kSubcommandNames) {
    if (known == name) return value;
  }
  return absl::InvalidArgumentError(
      absl::StrCat("unknown subcommand '", std::string(name), "'"));
}

int ExitCodeForStatus(const absl::Status& status) {
  switch (status.code()) {
    case absl::StatusCode::kOk:
      return kExitOk;
    case absl::StatusCode::kNotFound:
    case absl::StatusCode::kPermissionDenied:
      return kExitIo;
    case absl::StatusCode::kInvalidArgument:
    case absl::StatusCode::kOutOfRange:
      return kExitParse;
    case absl::StatusCode::kFailedPrecondition:
      return kExitInfeasible;
    default:
      return kExitNumerical;
  }
}

std::vector<double> GridSpec::Values() const {
  std::vector<double> out;
  if (points == 1) return {start};
  for (int i = 0; i < points; ++i) {
    const double f = static_cast<double>(i) / (points - 1);
    out.push_back(log_spaced
                      ? std::exp(std::log(start) +
                                 f * (std::log(stop) - std::log(start)))
                      : start + f * (stop - start));
  }
  return out;
}

absl::StatusOr<GridSpec> ParseGridSpec(std::string_view text) {
  std::vector<absl::string_view> parts = absl::StrSplit(ToAbsl(text), ':');
  GridSpec spec;
  const bool shape_ok = parts.size() == 3 || (parts.size() == 4 &&
                                              parts[3] == "log");
  if (!shape_ok || !absl::SimpleAtod(parts[0], &spec.start) ||
      !absl::SimpleAtod(parts[1], &spec.stop) ||
      !absl::SimpleAtoi(parts[2], &spec.points)) {
    return absl::InvalidArgumentError(absl::StrCat(
        "grid '", std::string(text), "' is not start:stop:points[:log]"));
  }
  spec.log_spaced = parts.size() == 4;
  if (spec.points < 1 || !std::isfinite(spec.start) ||
      !std::isfinite(spec.stop) || spec.stop < spec.start) {
    return absl::InvalidArgumentError(absl::StrCat(
        "grid '", std::string(text),
        "' needs points >= 1 and start <= stop"));
  }
  if (spec.log_spaced && !(spec.start > 0.0)) {
    return absl::InvalidArgumentError("log-spaced grid needs start > 0");
  }
  return spec;
}

absl::StatusOr<std::optional<double>> ParseAlpha(std::string_view text) {
  if (text == "auto") return std::optional<double>();
  double alpha = 0.0;
  if (!absl::SimpleAtod(ToAbsl(text), &alpha) || !(alpha > 1.0) ||
      !std::isfinite(alpha)) {
    return absl::InvalidArgumentError(absl::StrCat(
        "--alpha must be 'auto' or a number > 1, got '", std::string(text),
        "'"));
  }
  return std::optional<double>(alpha);
}

absl::Status ValidateConfig(const RunConfig& config) {
  if (absl::Status s = config.params.Validate(); !s.ok()) return s;
  if (config.n.has_value() && *config.n < 2) {
    return absl::InvalidArgumentError(
        absl::StrCat("--n must be >= 2, got ", *config.n));
  }
  if (config.lambda2.has_value() && !(*config.lambda2 >= 0.0)) {
    return absl::InvalidArgumentError("--lambda2 must be >= 0");
  }
  if (config.lambda_n.has_value() && !(*config.lambda_n > 0.0)) {
    return absl::InvalidArgumentError("--lambda-n must be > 0");
  }
  if (config.b.has_value() &&
      !(*config.b > 0.0 && std::isfinite(*config.b))) {
    return absl::InvalidArgumentError("--b must be positive");
  }
  if (config.t_grid.points < 1 || !(config.t_grid.start > 0.0)) {
    return absl::InvalidArgumentError("--t-grid needs t > 0 and points >= 1");
  }
  if (config.sweep_eps.has_value() &&
      !(config.sweep_eps->start > 0.0)) {
    return absl::InvalidArgumentError("--sweep-eps needs epsilon > 0");
  }
  if (!(config.a > 0.0)) {
    return absl::InvalidArgumentError("--a must be positive");
  }
  if (!(config.eta > 0.0 && config.eta < 1.0)) {
    return absl::InvalidArgumentError("--eta must be in (0, 1)");
  }
  if (config.alpha.has_value() && !(*config.alpha > 1.0)) {
    return absl::InvalidArgumentError("--alpha must be > 1");
  }
  if (config.trials < 2) {
    return absl::InvalidArgumentError("--trials must be >= 2");
  }
  if (config.format == OutputFormat::kCsv && !SupportsCsv(config)) {
    return absl::InvalidArgumentError(absl::StrCat(
        "csv output is only available for consensus and for --sweep-eps "
        "runs of solve-b and bounds"));
  }
  return absl::OkStatus();
}

RunResult Execute(const RunConfig& config, std::string_view generated_at) {
  ReportDocument doc;
  doc.subcommand = std::string(SubcommandName(config.subcommand));
  doc.generated_at = std::string(generated_at);
  std::optional<Table> table;
  bool audits_passed = true;

  absl::Status status = ValidateConfig(config);
  if (status.ok()) {
    switch (config.subcommand) {
      case Subcommand::kPrivatize:
        status = RunPrivatize(config, doc);
        break;
      case Subcommand::kSolveB:
        status = RunSolveB(config, doc, table);
        break;
      case Subcommand::kConsensus:
        status = RunConsensus(config, doc, table);
        break;
      case Subcommand::kBounds:
        status = RunBounds(config, doc, table);
        break;
      case Subcommand::kValidate:
        status = RunValidate(config, doc, audits_passed);
        break;
      case Subcommand::kAttackDemo:
        status = RunAttackDemo(doc);
        break;
    }
  }

  RunResult result;
  if (!status.ok()) {
    result.exit_code = ExitCodeForStatus(status);
    result.error_message = std::string(status.message());
    doc.error = Json{{"code", absl::StatusCodeToString(status.code())},
                     {"exit_code", result.exit_code},
                     {"message", result.error_message}};
    result.output = SerializeReport(doc);
    return result;
  }
  if (!audits_passed) {
    result.exit_code = kExitAuditFailed;
    result.error_message = "one or more audits did not behave as expected";
  }
  result.output = config.format == OutputFormat::kCsv && table.has_value()
                      ? FormatCsv(*table)
                      : SerializeReport(doc);
  return result;
}

int Run(const RunConfig& config) {
  RunResult result = Execute(config, UtcTimestamp());
  if (!result.error_message.empty()) {
    std::cerr << "privconn: " << result.error_message << "\n";
  }
  if (config.output_path == "-") {
    std::cout << result.output;
    std::cout.flush();
    return std::cout ? result.exit_code : kExitIo;
  }
  std::ofstream out(config.output_path, std::ios::binary | std::ios::trunc);
  if (!out || !(out << result.output) || !(out.flush())) {
    std::cerr << "privconn: cannot write '" << config.output_path << "'\n";
    return kExitIo;
  }
  return result.exit_code;
}

}  // namespace privconn
