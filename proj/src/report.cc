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

#include "privconn/report.h"

#include <chrono>
#include <cmath>
#include <ctime>
#include <limits>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_join.h"

namespace privconn {
namespace {

// Runs `body`, turning nlohmann type/key errors into InvalidArgument.
template <typename T, typename F>
absl::StatusOr<T> Decode(std::string_view what, F body) {
  try {
    return body();
  } catch (const Json::exception& e) {
    return absl::InvalidArgumentError(
        absl::StrCat("malformed ", std::string(what), ": ", e.what()));
  }
}

// JSON has no infinities; they are written as null.
double DoubleOrNegInf(const Json& j) {
  return j.is_null() ? -std::numeric_limits<double>::infinity()
                     : j.get<double>();
}

}  // namespace

Json ToJson(const PrivacyParams& params) {
  return Json{{"epsilon", params.epsilon},
              {"delta", params.delta},
              {"A", params.adjacency}};
}

Json ToJson(const PrivateRelease& release) {
  return Json{{"lambda2_tilde", release.lambda2_tilde},
              {"b", release.scale_b},
              {"C", release.normalizer_c},
              {"n", release.num_nodes},
              {"epsilon", release.params.epsilon},
              {"delta", release.params.delta},
              {"A", release.params.adjacency},
              {"seed", release.seed}};
}

Json ToJson(const PropertyBoundReport& report) {
  return Json{{"mode", BoundModeName(report.mode)},
              {"d_lower", report.d_lower},
              {"d_upper", report.d_upper},
              {"rho_lower", report.rho_lower},
              {"rho_upper", report.rho_upper},
              {"alpha_d", report.alpha_d},
              {"alpha_rho", report.alpha_rho},
              {"lambda2", report.lambda2},
              {"lambda_n", report.lambda_n},
              {"n", report.n},
              {"b", report.b},
              {"expected_lambda2", report.expected_lambda2},
              {"expected_inverse_sqrt_lambda2",
               report.expected_inverse_sqrt_lambda2}};
}

Json ToJson(const AuditCase& c) {
  return Json{{"label", c.label},         {"statistic", c.statistic},
              {"bound", c.bound},         {"slack", c.slack},
              {"violation", c.violation}, {"passed", c.passed}};
}

Json ToJson(const AuditReport& report) {
  Json details = Json::array();
  for (const AuditCase& c : report.details) details.push_back(ToJson(c));
  return Json{{"audit_name", report.name},
              {"trials", report.trials},
              {"worst_violation", report.worst_violation},
              {"passed", report.passed},
              {"details", std::move(details)}};
}

Json ToJson(const BoundCurvePoint& point) {
  return Json{{"t", point.t},
              {"bound", point.bound},
              {"expected_error", point.expected_error},
              {"probability_lower_bound", point.probability_lower_bound}};
}

Json ToJson(const ConcentrationBound& bound) {
  return Json{{"t", bound.t},
              {"a", bound.a},
              {"b", bound.b},
              {"n", bound.n},
              {"rho1", bound.rho.rho1},
              {"rho2", bound.rho.rho2},
              {"rho3", bound.rho.rho3},
              {"C", bound.normalizer_c},
              {"expected_error", bound.expected_error},
              {"bound", bound.bound},
              {"vacuous", bound.vacuous}};
}

absl::StatusOr<PrivacyParams> PrivacyParamsFromJson(const Json& j) {
  return Decode<PrivacyParams>("privacy parameters", [&] {
    return PrivacyParams{j.at("epsilon").get<double>(),
                         j.at("delta").get<double>(), j.at("A").get<int>()};
  });
}

absl::StatusOr<PrivateRelease> PrivateReleaseFromJson(const Json& j) {
  return Decode<PrivateRelease>("release", [&] {
    PrivateRelease r;
    r.lambda2_tilde = j.at("lambda2_tilde").get<double>();
    r.scale_b = j.at("b").get<double>();
    r.normalizer_c = j.at("C").get<double>();
    r.num_nodes = j.at("n").get<int>();
    r.params.epsilon = j.at("epsilon").get<double>();
    r.params.delta = j.at("delta").get<double>();
    r.params.adjacency = j.at("A").get<int>();
    r.seed = j.at("seed").get<uint64_t>();
    return r;
  });
}

absl::StatusOr<PropertyBoundReport> PropertyBoundReportFromJson(const Json& j) {
  return Decode<PropertyBoundReport>("bound report", [&] {
    PropertyBoundReport r;
    const std::string mode = j.at("mode").get<std::string>();
    if (mode != "exact" && mode != "expected") {
      throw Json::other_error::create(501, "unknown mode " + mode, nullptr);
    }
    r.mode = mode == "exact" ? BoundMode::kExact : BoundMode::kExpected;
    r.d_lower = j.at("d_lower").get<double>();
    r.d_upper = j.at("d_upper").get<double>();
    r.rho_lower = j.at("rho_lower").get<double>();
    r.rho_upper = j.at("rho_upper").get<double>();
    r.alpha_d = j.at("alpha_d").get<double>();
    r.alpha_rho = j.at("alpha_rho").get<double>();
    r.lambda2 = j.at("lambda2").get<double>();
    r.lambda_n = j.at("lambda_n").get<double>();
    r.n = j.at("n").get<int>();
    r.b = j.at("b").get<double>();
    r.expected_lambda2 = j.at("expected_lambda2").get<double>();
    r.expected_inverse_sqrt_lambda2 =
        j.at("expected_inverse_sqrt_lambda2").get<double>();
    return r;
  });
}

absl::StatusOr<AuditReport> AuditReportFromJson(const Json& j) {
  return Decode<AuditReport>("audit report", [&] {
    AuditReport r;
    r.name = j.at("audit_name").get<std::string>();
    r.trials = j.at("trials").get<int64_t>();
    r.worst_violation = DoubleOrNegInf(j.at("worst_violation"));
    r.passed = j.at("passed").get<bool>();
    for (const Json& c : j.at("details")) {
      AuditCase ac;
      ac.label = c.at("label").get<std::string>();
      ac.statistic = c.at("statistic").get<double>();
      ac.bound = c.at("bound").get<double>();
      ac.slack = c.at("slack").get<double>();
      ac.violation = c.at("violation").get<double>();
      ac.passed = c.at("passed").get<bool>();
      r.details.push_back(std::move(ac));
    }
    return r;
  });
}

absl::StatusOr<BoundCurvePoint> BoundCurvePointFromJson(const Json& j) {
  return Decode<BoundCurvePoint>("curve point", [&] {
    return BoundCurvePoint{j.at("t").get<double>(), j.at("bound").get<double>(),
                           j.at("expected_error").get<double>(),
                           j.at("probability_lower_bound").get<double>()};
  });
}

Json ToJson(const ReportDocument& doc) {
  Json j{{"tool", "privconn"},
         {"subcommand", doc.subcommand},
         {std::string(kGeneratedAtKey), doc.generated_at},
         {"inputs", doc.inputs},
         {"public_statistics", doc.public_statistics},
         {"results", doc.results},
         {"audit", doc.audit}};
  if (!doc.error.is_null()) j["error"] = doc.error;
  return j;
}

absl::StatusOr<ReportDocument> ReportDocumentFromJson(const Json& j) {
  return Decode<ReportDocument>("report", [&] {
    ReportDocument doc;
    doc.subcommand = j.at("subcommand").get<std::string>();
    doc.generated_at = j.at(std::string(kGeneratedAtKey)).get<std::string>();
    doc.inputs = j.at("inputs");
    doc.public_statistics = j.at("public_statistics");
    doc.results = j.at("results");
    doc.audit = j.at("audit");
    if (j.contains("error")) doc.error = j.at("error");
    return doc;
  });
}

std::string SerializeReport(const ReportDocument& doc) {
  return ToJson(doc).dump(2) + "\n";
}

absl::StatusOr<ReportDocument> ParseReport(std::string_view text) {
  Json j = Json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) {
    return absl::InvalidArgumentError("report is not valid JSON");
  }
  return ReportDocumentFromJson(j);
}

std::string UtcTimestamp() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm utc{};
  gmtime_r(&now, &utc);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buf;
}

std::string FormatCsv(const Table& table) {
  std::string out = absl::StrJoin(table.header, ",") + "\n";
  for (const std::vector<double>& row : table.rows) {
    out += absl::StrJoin(row, ",", [](std::string* s, double v) {
      absl::StrAppend(s, absl::StrFormat("%.17g", v));
    });
    out += "\n";
  }
  return out;
}

Json ToJson(const Table& table) {
  Json rows = Json::array();
  for (const std::vector<double>& row : table.rows) {
    Json record = Json::object();
    for (size_t k = 0; k < table.header.size() && k < row.size(); ++k) {
      record[table.header[k]] = row[k];
    }
    rows.push_back(std::move(record));
  }
  return rows;
}

}  // namespace privconn
