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

#include "privconn/scale_solver.h"

#include <cmath>
#include <limits>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "privconn/bounded_laplace.h"

namespace privconn {

absl::Status PrivacyParams::Validate() const {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    return absl::InvalidArgumentError(
        absl::StrCat("epsilon must be positive, got ", epsilon));
  }
  if (!(delta > 0.0 && delta < 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("delta must be in (0, 1), got ", delta));
  }
  if (adjacency < 1) {
    return absl::InvalidArgumentError(
        absl::StrCat("adjacency A must be >= 1, got ", adjacency));
  }
  return absl::OkStatus();
}

absl::StatusOr<PrivacyParams> PrivacyParams::Create(double epsilon,
                                                    double delta,
                                                    int adjacency) {
  PrivacyParams params{epsilon, delta, adjacency};
  if (absl::Status s = params.Validate(); !s.ok()) return s;
  return params;
}

double SensitivityBound(int adjacency) { return 2.0 * adjacency; }

absl::StatusOr<double> DeltaC(double b, int adjacency, double n) {
  const double sensitivity = SensitivityBound(adjacency);
  if (sensitivity > n) {
    return absl::OutOfRangeError(absl::StrCat(
        "sensitivity 2A = ", sensitivity, " exceeds the support width ", n));
  }
  absl::StatusOr<double> shifted = NormalizerC(sensitivity, b, n);
  if (!shifted.ok()) return shifted.status();
  return *shifted / NormalizerCUnchecked(0.0, b, n);
}

double PrivacyDenominator(double b, const PrivacyParams& params, double n) {
  const double sensitivity = SensitivityBound(params.adjacency);
  const double ratio = NormalizerCUnchecked(sensitivity, b, n) /
                       NormalizerCUnchecked(0.0, b, n);
  return params.epsilon - std::log(ratio) - std::log1p(-params.delta);
}

double ScaleInequalitySlack(double b, const PrivacyParams& params, double n) {
  const double denominator = PrivacyDenominator(b, params, n);
  if (!(denominator > 0.0)) return -std::numeric_limits<double>::infinity();
  return b - SensitivityBound(params.adjacency) / denominator;
}

absl::StatusOr<double> SolveScale(const PrivacyParams& params, double n) {
  if (absl::Status s = params.Validate(); !s.ok()) return s;
  const double sensitivity = SensitivityBound(params.adjacency);
  if (!(n >= sensitivity)) {
    return absl::FailedPreconditionError(absl::StrCat(
        "infeasible: n = ", n, " is smaller than the sensitivity 2A = ",
        sensitivity));
  }
  auto excess = [&](double b) {
    return b * PrivacyDenominator(b, params, n) - sensitivity;
  };
  double lo = kScaleBracketLower;
  double hi = kScaleBracketUpperFactor * sensitivity / params.epsilon;
  if (!(excess(hi) >= 0.0)) {
    return absl::FailedPreconditionError(absl::StrFormat(
        "infeasible privacy parameters: eps - log DeltaC(b) - log(1 - delta) "
        "is too small for every b in [%g, %g]",
        lo, hi));
  }
  if (excess(lo) >= 0.0) return lo;
  while (hi - lo > kScaleTolerance) {
    const double mid = 0.5 * (lo + hi);
    if (excess(mid) >= 0.0) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

}  // namespace privconn
