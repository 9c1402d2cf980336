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

#ifndef PRIVCONN_REPORT_H_
#define PRIVCONN_REPORT_H_

#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "json.hpp"
#include "privconn/audits.h"
#include "privconn/consensus.h"
#include "privconn/mechanism.h"
#include "privconn/property_bounds.h"

namespace privconn {

// Keys keep insertion order so the same report always prints the same bytes.
using Json = nlohmann::ordered_json;

Json ToJson(const PrivacyParams& params);
Json ToJson(const PrivateRelease& release);
Json ToJson(const PropertyBoundReport& report);
Json ToJson(const AuditCase& c);
Json ToJson(const AuditReport& report);
Json ToJson(const BoundCurvePoint& point);
Json ToJson(const ConcentrationBound& bound);

// Inverses of ToJson. InvalidArgument on missing keys or wrong types.
absl::StatusOr<PrivacyParams> PrivacyParamsFromJson(const Json& j);
absl::StatusOr<PrivateRelease> PrivateReleaseFromJson(const Json& j);
absl::StatusOr<PropertyBoundReport> PropertyBoundReportFromJson(const Json& j);
absl::StatusOr<AuditReport> AuditReportFromJson(const Json& j);
absl::StatusOr<BoundCurvePoint> BoundCurvePointFromJson(const Json& j);

// Top-level report document. `generated_at` is the only field that changes
// between identical runs.
struct ReportDocument {
  std::string subcommand;
  std::string generated_at;
  Json inputs = Json::object();
  Json public_statistics = Json::object();
  Json results = Json::object();
  Json audit = nullptr;
  // Set only when the run failed.
  Json error = nullptr;

  bool operator==(const ReportDocument&) const = default;
};

inline constexpr std::string_view kGeneratedAtKey = "generated_at";

Json ToJson(const ReportDocument& doc);
absl::StatusOr<ReportDocument> ReportDocumentFromJson(const Json& j);

// Pretty-printed UTF-8 JSON with a trailing newline.
std::string SerializeReport(const ReportDocument& doc);
absl::StatusOr<ReportDocument> ParseReport(std::string_view text);

// Current UTC time as YYYY-MM-DDTHH:MM:SSZ.
std::string UtcTimestamp();

// Plot-ready table; cells are formatted with 17 significant digits.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

std::string FormatCsv(const Table& table);
Json ToJson(const Table& table);

}  // namespace privconn

#endif  // PRIVCONN_REPORT_H_
