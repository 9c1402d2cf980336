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

#ifndef PRIVCONN_SCALE_SOLVER_H_
#define PRIVCONN_SCALE_SOLVER_H_

#include "absl/status/status.h"
#include "absl/status/statusor.h"

namespace privconn {

// (epsilon, delta) edge differential privacy where graphs on the same nodes
// are adjacent when their edge sets differ in at most `adjacency` pairs.
struct PrivacyParams {
  double epsilon = 0.4;
  double delta = 0.05;
  int adjacency = 1;

  // epsilon > 0, 0 < delta < 1, adjacency >= 1.
  absl::Status Validate() const;
  static absl::StatusOr<PrivacyParams> Create(double epsilon, double delta,
                                              int adjacency);

  bool operator==(const PrivacyParams&) const = default;
};

// Upper bound on how far lambda2 can move between adjacent graphs: 2A.
double SensitivityBound(int adjacency);

// Ratio C_{2A}(b) / C_0(b) of normalizers on the support [0, n]. >= 1 when
// 2A <= n / 2. OutOfRange when 2A > n.
absl::StatusOr<double> DeltaC(double b, int adjacency, double n);

// Denominator of the privacy condition, eps - log DeltaC(b) - log(1 - delta).
// The condition b >= 2A / denominator can only hold where it is positive.
double PrivacyDenominator(double b, const PrivacyParams& params, double n);

// b - 2A / denominator, or -infinity where the denominator is not positive.
// Nonnegative exactly when b satisfies the privacy condition.
double ScaleInequalitySlack(double b, const PrivacyParams& params, double n);

inline constexpr double kScaleTolerance = 1e-6;
inline constexpr double kScaleBracketLower = 1e-6;
// Upper end of the search bracket is this multiple of 2A / epsilon.
inline constexpr double kScaleBracketUpperFactor = 1e4;

// Smallest b (to kScaleTolerance) with b >= 2A / (eps - log DeltaC(b) -
// log(1 - delta)). Bisection on b * denominator(b) - 2A, which has the same
// sign as b - g(b) wherever the denominator is positive and no poles. The
// returned value is the feasible end of the final bracket.
//
// FailedPrecondition when 2A > n or when no b in the bracket is feasible.
absl::StatusOr<double> SolveScale(const PrivacyParams& params, double n);

}  // namespace privconn

#endif  // PRIVCONN_SCALE_SOLVER_H_
