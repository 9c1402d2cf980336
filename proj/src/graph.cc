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

#include "privconn/graph.h"

#include <algorithm>
#include <deque>
#include <iterator>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace privconn {
namespace {

Edge Normalized(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

// Distances from `source`; -1 marks unreachable nodes.
std::vector<int> BfsDistances(const std::vector<std::vector<int>>& adjacency,
                              int source) {
  std::vector<int> dist(adjacency.size(), -1);
  std::deque<int> frontier = {source};
  dist[source] = 0;
  while (!frontier.empty()) {
    const int u = frontier.front();
    frontier.pop_front();
    for (int v : adjacency[u]) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        frontier.push_back(v);
      }
    }
  }
  return dist;
}

}  // namespace

absl::StatusOr<Graph> Graph::Create(int num_nodes,
                                    std::span<const Edge> edges) {
  if (num_nodes < 1) {
    return absl::InvalidArgumentError(
        absl::StrCat("graph needs at least one node, got ", num_nodes));
  }
  std::vector<Edge> normalized;
  normalized.reserve(edges.size());
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= num_nodes || v >= num_nodes) {
      return absl::InvalidArgumentError(absl::StrCat(
          "edge (", u, ", ", v, ") has an endpoint outside [0, ", num_nodes,
          ")"));
    }
    if (u == v) {
      return absl::InvalidArgumentError(
          absl::StrCat("self-loop at node ", u));
    }
    normalized.push_back(Normalized(u, v));
  }
  std::sort(normalized.begin(), normalized.end());
  normalized.erase(std::unique(normalized.begin(), normalized.end()),
                   normalized.end());
  return Graph(num_nodes, std::move(normalized));
}

Graph Graph::FromPairMask(int num_nodes, uint64_t mask) {
  std::vector<Edge> edges;
  const std::vector<Edge> pairs = AllNodePairs(num_nodes);
  for (size_t k = 0; k < pairs.size(); ++k) {
    if ((mask >> k) & 1u) edges.push_back(pairs[k]);
  }
  return Graph(num_nodes, std::move(edges));
}

bool Graph::HasEdge(int u, int v) const {
  return std::binary_search(edges_.begin(), edges_.end(), Normalized(u, v));
}

std::vector<int> Graph::Degrees() const {
  std::vector<int> degrees(num_nodes_, 0);
  for (const auto& [u, v] : edges_) {
    ++degrees[u];
    ++degrees[v];
  }
  return degrees;
}

std::vector<std::vector<int>> Graph::AdjacencyLists() const {
  std::vector<std::vector<int>> adjacency(num_nodes_);
  for (const auto& [u, v] : edges_) {
    adjacency[u].push_back(v);
    adjacency[v].push_back(u);
  }
  return adjacency;
}

Graph Graph::WithEdgeToggled(int u, int v) const {
  const Edge e = Normalized(u, v);
  std::vector<Edge> edges = edges_;
  auto it = std::lower_bound(edges.begin(), edges.end(), e);
  if (it != edges.end() && *it == e) {
    edges.erase(it);
  } else {
    edges.insert(it, e);
  }
  return Graph(num_nodes_, std::move(edges));
}

std::vector<Edge> AllNodePairs(int num_nodes) {
  std::vector<Edge> pairs;
  for (int i = 0; i < num_nodes; ++i) {
    for (int j = i + 1; j < num_nodes; ++j) pairs.emplace_back(i, j);
  }
  return pairs;
}

Graph EmptyGraph(int n) { return *Graph::Create(n, {}); }

Graph CompleteGraph(int n) {
  const std::vector<Edge> pairs = AllNodePairs(n);
  return *Graph::Create(n, pairs);
}

Graph PathGraph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return *Graph::Create(n, edges);
}

Graph CycleGraph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return *Graph::Create(n, edges);
}

Graph StarGraph(int n) {
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
  return *Graph::Create(n, edges);
}

double SquareMatrix::Trace() const {
  double trace = 0.0;
  for (int i = 0; i < n_; ++i) trace += (*this)(i, i);
  return trace;
}

SquareMatrix Laplacian(const Graph& g) {
  SquareMatrix l(g.num_nodes());
  for (const auto& [u, v] : g.edges()) {
    l(u, v) = -1.0;
    l(v, u) = -1.0;
    l(u, u) += 1.0;
    l(v, v) += 1.0;
  }
  return l;
}

bool IsConnected(const Graph& g) {
  const std::vector<int> dist = BfsDistances(g.AdjacencyLists(), 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

int MinDegree(const Graph& g) {
  const std::vector<int> degrees = g.Degrees();
  return *std::min_element(degrees.begin(), degrees.end());
}

absl::StatusOr<int> SymmetricDifferenceSize(const Graph& g, const Graph& h) {
  if (g.num_nodes() != h.num_nodes()) {
    return absl::InvalidArgumentError(
        absl::StrCat("node counts differ: ", g.num_nodes(), " vs ",
                     h.num_nodes()));
  }
  std::vector<Edge> diff;
  std::set_symmetric_difference(g.edges().begin(), g.edges().end(),
                                h.edges().begin(), h.edges().end(),
                                std::back_inserter(diff));
  return static_cast<int>(diff.size());
}

absl::StatusOr<bool> AreAdjacent(const Graph& g, const Graph& h,
                                 int adjacency) {
  absl::StatusOr<int> diff = SymmetricDifferenceSize(g, h);
  if (!diff.ok()) return diff.status();
  return *diff <= adjacency;
}

namespace {

struct DistanceStats {
  int diameter = 0;
  double mean = 0.0;
};

absl::StatusOr<DistanceStats> AllPairsDistanceStats(const Graph& g) {
  const auto adjacency = g.AdjacencyLists();
  const int n = g.num_nodes();
  DistanceStats stats;
  long long total = 0;
  for (int s = 0; s < n; ++s) {
    const std::vector<int> dist = BfsDistances(adjacency, s);
    for (int t = s + 1; t < n; ++t) {
      if (dist[t] < 0) {
        return absl::OutOfRangeError(
            absl::StrCat("graph is disconnected: no path between ", s,
                         " and ", t));
      }
      stats.diameter = std::max(stats.diameter, dist[t]);
      total += dist[t];
    }
  }
  if (n < 2) {
    return absl::OutOfRangeError("distance statistics need n >= 2");
  }
  stats.mean = static_cast<double>(total) / (0.5 * n * (n - 1));
  return stats;
}

}  // namespace

absl::StatusOr<int> DiameterExact(const Graph& g) {
  absl::StatusOr<DistanceStats> stats = AllPairsDistanceStats(g);
  if (!stats.ok()) return stats.status();
  return stats->diameter;
}

absl::StatusOr<double> MeanDistanceExact(const Graph& g) {
  absl::StatusOr<DistanceStats> stats = AllPairsDistanceStats(g);
  if (!stats.ok()) return stats.status();
  return stats->mean;
}

}  // namespace privconn
