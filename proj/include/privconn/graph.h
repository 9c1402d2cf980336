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

#ifndef PRIVCONN_GRAPH_H_
#define PRIVCONN_GRAPH_H_

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"

namespace privconn {

// Unordered node pair, always stored with first < second.
using Edge = std::pair<int, int>;

// Undirected, unweighted simple graph on nodes 0..n-1. Immutable once built.
class Graph {
 public:
  // Validates endpoints, rejects self-loops and collapses duplicate or
  // reversed pairs into a single edge.
  static absl::StatusOr<Graph> Create(int num_nodes,
                                      std::span<const Edge> edges);

  // Graph whose edge set is the bits of `mask` over the pair order of
  // AllNodePairs(num_nodes). Requires num_nodes * (num_nodes - 1) / 2 <= 63.
  static Graph FromPairMask(int num_nodes, uint64_t mask);

  int num_nodes() const { return num_nodes_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  // Sorted lexicographically.
  const std::vector<Edge>& edges() const { return edges_; }

  bool HasEdge(int u, int v) const;
  std::vector<int> Degrees() const;
  std::vector<std::vector<int>> AdjacencyLists() const;

  // Copy with the (u, v) pair added if absent or removed if present.
  Graph WithEdgeToggled(int u, int v) const;

  bool operator==(const Graph& other) const = default;

 private:
  Graph(int num_nodes, std::vector<Edge> edges)
      : num_nodes_(num_nodes), edges_(std::move(edges)) {}

  int num_nodes_ = 0;
  std::vector<Edge> edges_;
};

// All n(n-1)/2 node pairs in lexicographic order.
std::vector<Edge> AllNodePairs(int num_nodes);

Graph EmptyGraph(int n);
Graph CompleteGraph(int n);
Graph PathGraph(int n);
Graph CycleGraph(int n);
// Node 0 is the hub.
Graph StarGraph(int n);

// Dense row-major square matrix; only what the spectral code needs.
class SquareMatrix {
 public:
  explicit SquareMatrix(int n) : n_(n), data_(static_cast<size_t>(n) * n) {}

  int size() const { return n_; }
  double& operator()(int i, int j) { return data_[Index(i, j)]; }
  double operator()(int i, int j) const { return data_[Index(i, j)]; }
  double Trace() const;

 private:
  size_t Index(int i, int j) const {
    return static_cast<size_t>(i) * n_ + static_cast<size_t>(j);
  }

  int n_;
  std::vector<double> data_;
};

// L = D - H: degrees on the diagonal, -1 for every edge.
SquareMatrix Laplacian(const Graph& g);

// Breadth-first reachability from node 0.
bool IsConnected(const Graph& g);

int MinDegree(const Graph& g);

// |E(g) Δ E(h)|. InvalidArgument when the node counts differ.
absl::StatusOr<int> SymmetricDifferenceSize(const Graph& g, const Graph& h);

// Adj_A(g, h): the edge sets differ in at most `adjacency` pairs.
absl::StatusOr<bool> AreAdjacent(const Graph& g, const Graph& h, int adjacency);

// All-pairs shortest-path statistics by n breadth-first searches. Both return
// OutOfRange for disconnected graphs.
absl::StatusOr<int> DiameterExact(const Graph& g);
// Average over the n(n-1)/2 unordered distinct pairs.
absl::StatusOr<double> MeanDistanceExact(const Graph& g);

}  // namespace privconn

#endif  // PRIVCONN_GRAPH_H_
