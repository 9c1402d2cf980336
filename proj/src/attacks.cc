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

#include "privconn/attacks.h"

#include <algorithm>
#include <cmath>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "privconn/property_bounds.h"
#include "privconn/spectrum.h"

namespace privconn {
namespace {

absl::StatusOr<std::vector<Edge>> NormalizePairs(int n,
                                                 const std::vector<Edge>& in) {
  std::vector<Edge> out;
  for (auto [u, v] : in) {
    if (u < 0 || v < 0 || u >= n || v >= n || u == v) {
      return absl::InvalidArgumentError(absl::StrCat(
          "invalid pair (", u, ", ", v, ") for n = ", n));
    }
    out.push_back(u < v ? Edge{u, v} : Edge{v, u});
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

absl::StatusOr<std::vector<Graph>> EnumerateConsistentGraphs(
    int n, const std::vector<Edge>& known_present,
    const std::vector<Edge>& known_absent, double lambda2_observed,
    double tol) {
  if (n < 2 || n > kMaxAttackNodes) {
    return absl::InvalidArgumentError(absl::StrCat(
        "enumeration needs 2 <= n <= ", kMaxAttackNodes, ", got ", n));
  }
  if (!(tol >= 0.0)) {
    return absl::InvalidArgumentError("tolerance must be >= 0");
  }
  absl::StatusOr<std::vector<Edge>> present = NormalizePairs(n, known_present);
  if (!present.ok()) return present.status();
  absl::StatusOr<std::vector<Edge>> absent = NormalizePairs(n, known_absent);
  if (!absent.ok()) return absent.status();

  std::vector<Edge> unknown;
  for (const Edge& e : AllNodePairs(n)) {
    const bool is_present =
        std::binary_search(present->begin(), present->end(), e);
    const bool is_absent = std::binary_search(absent->begin(), absent->end(), e);
    if (is_present && is_absent) {
      return absl::InvalidArgumentError(absl::StrCat(
          "pair (", e.first, ", ", e.second, ") is both present and absent"));
    }
    if (!is_present && !is_absent) unknown.push_back(e);
  }

  std::vector<Graph> consistent;
  const uint64_t candidates = uint64_t{1} << unknown.size();
  for (uint64_t mask = 0; mask < candidates; ++mask) {
    std::vector<Edge> edges = *present;
    for (size_t k = 0; k < unknown.size(); ++k) {
      if ((mask >> k) & 1u) edges.push_back(unknown[k]);
    }
    absl::StatusOr<Graph> g = Graph::Create(n, edges);
    if (!g.ok()) return g.status();
    absl::StatusOr<double> l2 = AlgebraicConnectivity(*g);
    if (!l2.ok()) return l2.status();
    if (std::abs(*l2 - lambda2_observed) <= tol) {
      consistent.push_back(*std::move(g));
    }
  }
  return consistent;
}

AttackScenario KnownNeighbourhoodScenario(double lambda2) {
  AttackScenario s;
  s.name = absl::StrCat("known neighbourhood of node 0, lambda2 = ", lambda2);
  s.n = 4;
  s.known_present = {{0, 1}, {0, 2}};
  s.known_absent = {{0, 3}};
  s.lambda2 = lambda2;
  return s;
}

absl::StatusOr<AttackOutcome> RunAttack(const AttackScenario& scenario,
                                        double tol) {
  absl::StatusOr<std::vector<Graph>> consistent = EnumerateConsistentGraphs(
      scenario.n, scenario.known_present, scenario.known_absent,
      scenario.lambda2, tol);
  if (!consistent.ok()) return consistent.status();

  AttackOutcome out;
  out.scenario = scenario;
  const int fixed =
      static_cast<int>(scenario.known_present.size() +
                       scenario.known_absent.size());
  out.candidates = 1 << (scenario.n * (scenario.n - 1) / 2 - fixed);
  out.consistent = *std::move(consistent);
  if (!out.consistent.empty()) {
    for (const Edge& e : AllNodePairs(scenario.n)) {
      const auto has = [&](const Graph& g) {
        return g.HasEdge(e.first, e.second);
      };
      if (std::all_of(out.consistent.begin(), out.consistent.end(), has)) {
        out.certain_present.push_back(e);
      } else if (std::none_of(out.consistent.begin(), out.consistent.end(),
                              has)) {
        out.certain_absent.push_back(e);
      }
    }
  }
  out.min_degree_lower_bound =
      MinDegreeInference(scenario.lambda2, scenario.n);
  return out;
}

}  // namespace privconn
