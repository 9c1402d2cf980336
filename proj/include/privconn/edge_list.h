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

#ifndef PRIVCONN_EDGE_LIST_H_
#define PRIVCONN_EDGE_LIST_H_

#include <string>
#include <string_view>

#include "absl/status/statusor.h"
#include "privconn/graph.h"

namespace privconn {

// Edge-list documents:
//
//   # comment
//   n=4
//   0 1
//   1 2   # trailing comments are fine
//
// The first non-comment line declares the node count (n >= 2); every later
// non-blank line holds two whitespace-separated 0-indexed endpoints. Errors
// are InvalidArgument and name the 1-based line number.
absl::StatusOr<Graph> ParseEdgeList(std::string_view text);

// Inverse of ParseEdgeList, one edge per line in sorted order.
std::string FormatEdgeList(const Graph& g);

// NotFound when the file cannot be opened; parse errors as above.
absl::StatusOr<Graph> ReadEdgeListFile(const std::string& path);

}  // namespace privconn

#endif  // PRIVCONN_EDGE_LIST_H_
