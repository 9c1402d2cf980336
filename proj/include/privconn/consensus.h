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

#ifndef PRIVCONN_CONSENSUS_H_
#define PRIVCONN_CONSENSUS_H_

#include <span>
#include <vector>

#include "absl/status/statusor.h"

namespace privconn {

// Consensus x' = -L x contracts disagreement like exp(-lambda2 t). With a
// private lambda2_tilde the estimated rate is exp(-lambda2_tilde t); this
// module bounds |estimate - truth| under the bounded Laplace law with scale b
// on [0, n].

double TrueRate(double lambda2, double t);

// The three closed-form pieces of E|exp(-x t) - exp(-lambda2 t)| against the
// unnormalized density exp(-|x - lambda2| / b) / b on [0, n]:
//   E|r~ - r| = (rho1 + rho2 - rho3) / (2 C_{lambda2}(b)).
// rho1 has a removable singularity at b t = 1; it is evaluated through
// expm1(z) / z near there, which is finite and continuous.
struct RhoTerms {
  double rho1 = 0.0;
  double rho2 = 0.0;
  double rho3 = 0.0;
};

// No argument checks; callers validate t > 0, b > 0, 0 <= lambda2 <= n.
RhoTerms ComputeRhoTerms(double t, double lambda2, double b, double n);

absl::StatusOr<double> ExpectedRateError(double t, double lambda2, double b,
                                         double n);

struct RateErrorQuery {
  double t = 1.0;
  double a = 0.2;
  // Only used by settle-time queries.
  double eta = 0.1;
};

// Markov bound P(|r~(t) - r(t)| >= a) <= E|r~ - r| / a. Values above 1 are
// kept as-is and flagged vacuous.
struct ConcentrationBound {
  double t = 0.0;
  double a = 0.0;
  double lambda2 = 0.0;
  double b = 0.0;
  double n = 0.0;
  RhoTerms rho;
  double normalizer_c = 0.0;
  double expected_error = 0.0;
  double bound = 0.0;
  bool vacuous = false;
};

absl::StatusOr<ConcentrationBound> ComputeConcentrationBound(
    const RateErrorQuery& query, double lambda2, double b, double n);

// Earliest time after which the concentration bound is at most eta:
//   lambda2 <= n/2: [K b / (lambda2 e) + 2 a C eta + 1] / (2 a C eta b),
//                   K = exp(-lambda2 / b) - exp((lambda2 - n) / b),
//   lambda2 >  n/2: (2 a C eta + 1) / (2 a C eta b),
// with C = C_{lambda2}(b). OutOfRange for lambda2 outside (0, n].
absl::StatusOr<double> SettleTime(const RateErrorQuery& query, double lambda2,
                                  double b, double n);

inline constexpr int kWorstCaseGridPoints = 10000;

// Largest SettleTime over lambda2 = k n / grid_points, k = 1..grid_points,
// plus lambda2 = n/2 on both branches. Uses public quantities only. The
// first branch grows like 1 / lambda2 as lambda2 -> 0, so this maximum is
// set by the smallest grid point and rises with grid resolution.
absl::StatusOr<double> WorstCaseSettleTime(
    const RateErrorQuery& query, double b, double n,
    int grid_points = kWorstCaseGridPoints);

// One row of a plotted bound curve.
struct BoundCurvePoint {
  double t = 0.0;
  double bound = 0.0;
  double expected_error = 0.0;
  // 1 - bound: lower bound on P(|r~(t) - r(t)| <= a), may be negative.
  double probability_lower_bound = 0.0;
};

absl::StatusOr<std::vector<BoundCurvePoint>> BoundCurve(
    std::span<const double> t_grid, double a, double lambda2, double b,
    double n);

}  // namespace privconn

#endif  // PRIVCONN_CONSENSUS_H_
