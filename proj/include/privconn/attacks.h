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

#ifndef PRIVCONN_ATTACKS_H_
#define PRIVCONN_ATTACKS_H_

#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "privconn/graph.h"

namespace privconn {

inline constexpr double kDefaultAttackTolerance = 1e-6;
inline constexpr int kMaxAttackNodes = 6;

// Brute force over every assignment of the pairs that are neither known
// present nor known absent: returns, in increasing candidate-mask order, the
// graphs whose lambda2 is within `tol` of `lambda2_observed`. An infinite
// tol keeps every candidate. InvalidArgument for n outside [2, 6], invalid
// pairs, or a pair listed as both present and absent.
absl::StatusOr<std::vector<Graph>> EnumerateConsistentGraphs(
    int n, const std::vector<Edge>& known_present,
    const std::vector<Edge>& known_absent, double lambda2_observed,
    double tol = kDefaultAttackTolerance);

// Side information held by an attacker who knows one node's neighbourhood
// and sees the exact lambda2.
struct AttackScenario {
  std::string name;
  int n = 0;
  std::vector<Edge> known_present;
  std::vector<Edge> known_absent;
  double lambda2 = 0.0;
};

// n = 4, node 0 adjacent to 1 and 2 but not 3. lambda2 = 2 pins node 3 to
// neighbours {1, 2}; lambda2 = 1 leaves two graphs, both with edge (1, 2).
AttackScenario KnownNeighbourhoodScenario(double lambda2);

struct AttackOutcome {
  AttackScenario scenario;
  int candidates = 0;
  std::vector<Graph> consistent;
  // Pairs present in every consistent graph, and absent from every one.
  std::vector<Edge> certain_present;
  std::vector<Edge> certain_absent;
  // Certified lower bound on the minimum degree from lambda2 alone.
  int min_degree_lower_bound = 0;
};

absl::StatusOr<AttackOutcome> RunAttack(const AttackScenario& scenario,
                                        double tol = kDefaultAttackTolerance);

}  // namespace privconn

#endif  // PRIVCONN_ATTACKS_H_
