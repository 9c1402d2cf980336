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

#include "privconn/consensus.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "privconn/bounded_laplace.h"

namespace privconn {
namespace {

absl::Status CheckRateArguments(double t, double lambda2, double b, double n) {
  if (!(t > 0.0) || !std::isfinite(t)) {
    return absl::InvalidArgumentError(
        absl::StrCat("time t must be positive, got ", t));
  }
  if (!(b > 0.0) || !std::isfinite(b)) {
    return absl::InvalidArgumentError(
        absl::StrCat("scale b must be positive, got ", b));
  }
  if (!(n > 0.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("node count must be positive, got ", n));
  }
  if (!(lambda2 >= 0.0 && lambda2 <= n)) {
    return absl::OutOfRangeError(
        absl::StrCat("lambda2 = ", lambda2, " is outside [0, ", n, "]"));
  }
  return absl::OkStatus();
}

// expm1(z) / z, continuous at 0.
double Expm1OverZ(double z) { return z == 0.0 ? 1.0 : std::expm1(z) / z; }

}  // namespace

double TrueRate(double lambda2, double t) { return std::exp(-lambda2 * t); }

RhoTerms ComputeRhoTerms(double t, double lambda2, double b, double n) {
  const double decay = std::exp(-lambda2 * t);
  const double z = lambda2 * (1.0 / b - t);
  // (1/b) * integral_0^lambda2 exp(-x t) exp((x - lambda2) / b) dx
  double lower_piece;
  if (std::fabs(z) < 0.5) {
    lower_piece =
        (lambda2 / b) * std::exp(-lambda2 / b) * Expm1OverZ(z);
  } else {
    lower_piece = (decay - std::exp(-lambda2 / b)) / (1.0 - b * t);
  }
  RhoTerms rho;
  rho.rho1 = lower_piece + decay * std::expm1(-lambda2 / b);
  rho.rho2 = -decay * std::expm1((lambda2 - n) / b);
  rho.rho3 = -decay * std::expm1(-(n - lambda2) * (b * t + 1.0) / b) /
             (b * t + 1.0);
  return rho;
}

absl::StatusOr<double> ExpectedRateError(double t, double lambda2, double b,
                                         double n) {
  if (absl::Status s = CheckRateArguments(t, lambda2, b, n); !s.ok()) return s;
  const RhoTerms rho = ComputeRhoTerms(t, lambda2, b, n);
  return (rho.rho1 + rho.rho2 - rho.rho3) /
         (2.0 * NormalizerCUnchecked(lambda2, b, n));
}

absl::StatusOr<ConcentrationBound> ComputeConcentrationBound(
    const RateErrorQuery& query, double lambda2, double b, double n) {
  if (absl::Status s = CheckRateArguments(query.t, lambda2, b, n); !s.ok()) {
    return s;
  }
  if (!(query.a > 0.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("error threshold a must be positive, got ", query.a));
  }
  ConcentrationBound out;
  out.t = query.t;
  out.a = query.a;
  out.lambda2 = lambda2;
  out.b = b;
  out.n = n;
  out.rho = ComputeRhoTerms(query.t, lambda2, b, n);
  out.normalizer_c = NormalizerCUnchecked(lambda2, b, n);
  out.expected_error =
      (out.rho.rho1 + out.rho.rho2 - out.rho.rho3) / (2.0 * out.normalizer_c);
  out.bound = out.expected_error / query.a;
  out.vacuous = out.bound > 1.0;
  return out;
}

absl::StatusOr<double> SettleTime(const RateErrorQuery& query, double lambda2,
                                  double b, double n) {
  if (!(query.a > 0.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("error threshold a must be positive, got ", query.a));
  }
  if (!(query.eta > 0.0 && query.eta < 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("probability eta must be in (0, 1), got ", query.eta));
  }
  if (!(b > 0.0) || !std::isfinite(b)) {
    return absl::InvalidArgumentError(
        absl::StrCat("scale b must be positive, got ", b));
  }
  if (!(lambda2 > 0.0 && lambda2 <= n)) {
    return absl::OutOfRangeError(absl::StrCat(
        "settle time needs lambda2 in (0, n], got ", lambda2, " with n = ", n));
  }
  const double c = NormalizerCUnchecked(lambda2, b, n);
  const double scaled = 2.0 * query.a * c * query.eta;
  double numerator = scaled + 1.0;
  if (lambda2 <= 0.5 * n) {
    const double k = std::exp(-lambda2 / b) - std::exp((lambda2 - n) / b);
    numerator += k * b / (lambda2 * std::numbers::e);
  }
  return numerator / (scaled * b);
}

absl::StatusOr<double> WorstCaseSettleTime(const RateErrorQuery& query,
                                           double b, double n,
                                           int grid_points) {
  if (grid_points < 1) {
    return absl::InvalidArgumentError("grid needs at least one point");
  }
  absl::StatusOr<double> worst = SettleTime(query, 0.5 * n, b, n);
  if (!worst.ok()) return worst.status();
  for (int k = 1; k <= grid_points; ++k) {
    absl::StatusOr<double> t = SettleTime(query, n * k / grid_points, b, n);
    if (!t.ok()) return t.status();
    *worst = std::max(*worst, *t);
  }
  return worst;
}

absl::StatusOr<std::vector<BoundCurvePoint>> BoundCurve(
    std::span<const double> t_grid, double a, double lambda2, double b,
    double n) {
  std::vector<BoundCurvePoint> curve;
  curve.reserve(t_grid.size());
  for (double t : t_grid) {
    absl::StatusOr<ConcentrationBound> bound =
        ComputeConcentrationBound({.t = t, .a = a}, lambda2, b, n);
    if (!bound.ok()) return bound.status();
    curve.push_back({.t = t,
                     .bound = bound->bound,
                     .expected_error = bound->expected_error,
                     .probability_lower_bound = 1.0 - bound->bound});
  }
  return curve;
}

}  // namespace privconn
