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

#ifndef PRIVCONN_AUDITS_H_
#define PRIVCONN_AUDITS_H_

#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "privconn/consensus.h"
#include "privconn/scale_solver.h"

namespace privconn {

// Statistical audits of the analytic claims. Every audit is deterministic
// for a fixed seed. A case passes when violation = statistic - bound - slack
// is <= 0; slack is three binomial (or sample) standard errors.
struct AuditCase {
  std::string label;
  double statistic = 0.0;
  double bound = 0.0;
  double slack = 0.0;
  double violation = 0.0;
  bool passed = true;
};

struct AuditReport {
  std::string name;
  int64_t trials = 0;
  // Largest violation over all cases; negative means every case passed.
  double worst_violation = -HUGE_VAL;
  bool passed = true;
  std::vector<AuditCase> details;

  // Appends `c` and folds it into worst_violation / passed.
  void Add(AuditCase c);
};

inline constexpr double kSigmaMultiplier = 3.0;

struct DpAuditConfig {
  int n = 5;
  PrivacyParams params;
  int pairs = 20;
  int64_t samples_per_graph = 1'000'000;
  int bins = 50;
  uint64_t seed = 1;
  // Multiplies the solved scale. Values below 1 break the mechanism on
  // purpose (negative control).
  double scale_multiplier = 1.0;
  // Adds K_n versus K_n minus one edge, where |lambda2 - lambda2'| = 2
  // reaches the sensitivity bound for A = 1.
  bool include_extremal_pair = true;
};

// Histograms the mechanism output on random Adj_A pairs (exactly A toggled
// pairs) and checks P[S] <= e^eps P'[S] + delta on the greedy worst bin set,
// in both directions. Requires 2 <= n <= 6, samples >= 1e5, bins >= 1.
absl::StatusOr<AuditReport> AuditDp(const DpAuditConfig& config);

// One pair of lambda2 values under the solved (and multiplied) scale b.
// Returns the two directional cases.
absl::StatusOr<std::vector<AuditCase>> AuditDpPair(
    double lambda2_g, double lambda2_h, double b, double n,
    const PrivacyParams& params, int64_t samples, int bins, uint64_t seed);

// Exhaustive max |lambda2(G) - lambda2(G')| over all graph pairs on n nodes
// whose edge sets differ in 1..A pairs, checked against 2A. Requires
// 2 <= n <= 6 and A >= 1.
absl::StatusOr<AuditReport> AuditSensitivity(int n, int adjacency);

struct ConcentrationAudit {
  AuditReport report;
  // 1 - bound at every grid t.
  std::vector<BoundCurvePoint> curve;
};

// Per t: empirical P(|r~(t) - r(t)| >= a) against the Markov bound. Each t
// draws from its own substream. Requires trials >= 1e4.
absl::StatusOr<ConcentrationAudit> AuditConcentration(
    double lambda2, double b, double n, std::span<const double> t_grid,
    double a, int64_t trials, uint64_t seed);

// Monte Carlo means of lambda2~, 1/sqrt(lambda2~) and |r~(t) - r(t)| against
// their closed forms, within three standard errors.
absl::StatusOr<AuditReport> AuditExpectations(double lambda2, double b,
                                              double n, int64_t trials,
                                              uint64_t seed, double t = 1.0);

}  // namespace privconn

#endif  // PRIVCONN_AUDITS_H_
