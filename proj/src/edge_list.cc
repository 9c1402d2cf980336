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

#include "privconn/edge_list.h"

#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"
#include "absl/strings/strip.h"
#include "absl/strings/ascii.h"

namespace privconn {
namespace {

absl::Status LineError(int line_number, absl::string_view message) {
  return absl::InvalidArgumentError(
      absl::StrCat("line ", line_number, ": ", message));
}

}  // namespace

absl::StatusOr<Graph> ParseEdgeList(std::string_view text) {
  std::optional<int> num_nodes;
  std::vector<Edge> edges;
  int line_number = 0;
  // This absl build keeps its own string_view type.
  const absl::string_view input(text.data(), text.size());
  for (absl::string_view line : absl::StrSplit(input, '\n')) {
    ++line_number;
    if (size_t hash = line.find('#'); hash != absl::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = absl::StripAsciiWhitespace(line);
    if (line.empty()) continue;

    if (!num_nodes.has_value()) {
      absl::string_view rest = line;
      if (!absl::ConsumePrefix(&rest, "n")) {
        return LineError(line_number, "expected header 'n=<int>'");
      }
      rest = absl::StripLeadingAsciiWhitespace(rest);
      if (!absl::ConsumePrefix(&rest, "=")) {
        return LineError(line_number, "expected header 'n=<int>'");
      }
      int n = 0;
      if (!absl::SimpleAtoi(absl::StripAsciiWhitespace(rest), &n)) {
        return LineError(line_number, "node count is not an integer");
      }
      if (n < 2) {
        return LineError(line_number,
                         absl::StrCat("node count must be >= 2, got ", n));
      }
      num_nodes = n;
      continue;
    }

    std::vector<absl::string_view> tokens =
        absl::StrSplit(line, absl::ByAnyChar(" \t\r"), absl::SkipEmpty());
    int u = 0;
    int v = 0;
    if (tokens.size() != 2 || !absl::SimpleAtoi(tokens[0], &u) ||
        !absl::SimpleAtoi(tokens[1], &v)) {
      return LineError(line_number, absl::StrCat("malformed edge '", line,
                                                 "', expected '<u> <v>'"));
    }
    if (u < 0 || v < 0 || u >= *num_nodes || v >= *num_nodes) {
      return LineError(line_number,
                       absl::StrCat("endpoint out of range [0, ", *num_nodes,
                                    ") in '", line, "'"));
    }
    if (u == v) {
      return LineError(line_number, absl::StrCat("self-loop at node ", u));
    }
    edges.emplace_back(u, v);
  }
  if (!num_nodes.has_value()) {
    return absl::InvalidArgumentError("missing header 'n=<int>'");
  }
  return Graph::Create(*num_nodes, edges);
}

std::string FormatEdgeList(const Graph& g) {
  std::string out = absl::StrCat("n=", g.num_nodes(), "\n");
  for (const auto& [u, v] : g.edges()) absl::StrAppend(&out, u, " ", v, "\n");
  return out;
}

absl::StatusOr<Graph> ReadEdgeListFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    return absl::NotFoundError(absl::StrCat("cannot open '", path, "'"));
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseEdgeList(buffer.str());
}

}  // namespace privconn
