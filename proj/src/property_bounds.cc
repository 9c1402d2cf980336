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

#include "privconn/property_bounds.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "privconn/bounded_laplace.h"
#include "privconn/special_functions.h"

namespace privconn {
namespace {

constexpr int kAlphaScanPoints = 400;

double AlphaFactor(double alpha) {
  return std::sqrt((alpha * alpha - 1.0) / (4.0 * alpha));
}

double LogBase(double alpha, double x) { return std::log(x) / std::log(alpha); }

absl::Status CheckSpectralArguments(double lambda2, double lambda_n, int n) {
  if (n < 2) {
    return absl::InvalidArgumentError(
        absl::StrCat("bounds need n >= 2, got ", n));
  }
  if (!(lambda2 > 0.0)) {
    return absl::OutOfRangeError(absl::StrCat(
        "bounds need a connected graph (lambda2 > 0), got ", lambda2));
  }
  if (!(lambda_n >= lambda2)) {
    return absl::InvalidArgumentError(absl::StrCat(
        "lambda_n = ", lambda_n, " is smaller than lambda2 = ", lambda2));
  }
  return absl::OkStatus();
}

absl::Status CheckAlpha(double alpha) {
  if (!(alpha > 1.0) || !std::isfinite(alpha)) {
    return absl::InvalidArgumentError(
        absl::StrCat("alpha must be > 1, got ", alpha));
  }
  return absl::OkStatus();
}

absl::Status CheckDistributionArguments(double lambda2, double b, double n) {
  if (!(b > 0.0) || !std::isfinite(b)) {
    return absl::InvalidArgumentError(
        absl::StrCat("scale b must be positive, got ", b));
  }
  if (!(lambda2 >= 0.0 && lambda2 <= n)) {
    return absl::OutOfRangeError(
        absl::StrCat("lambda2 = ", lambda2, " is outside [0, ", n, "]"));
  }
  return absl::OkStatus();
}

double GoldenSectionMinimum(const std::function<double(double)>& f, double lo,
                            double hi, double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  while (hi - lo > tol) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = f(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = f(x2);
    }
  }
  return f1 <= f2 ? x1 : x2;
}

}  // namespace

double DiameterUpperBound(double spectral_factor, double alpha, int n) {
  return (2.0 * spectral_factor * AlphaFactor(alpha) + 2.0) *
         LogBase(alpha, 0.5 * n);
}

double MeanDistanceUpperBound(double spectral_factor, double alpha, int n) {
  return (spectral_factor * AlphaFactor(alpha) + 1.0) *
         (static_cast<double>(n) / (n - 1)) *
         (0.5 + LogBase(alpha, 0.5 * n));
}

double DiameterLowerBound(double lambda2, int n) {
  return 4.0 / (n * lambda2);
}

double MeanDistanceLowerBound(double lambda2, int n) {
  return 2.0 / ((n - 1) * lambda2) + (n - 2) / (2.0 * (n - 1));
}

absl::StatusOr<Interval> DiameterBoundsExact(double lambda2, double lambda_n,
                                             int n, double alpha) {
  if (absl::Status s = CheckSpectralArguments(lambda2, lambda_n, n); !s.ok()) {
    return s;
  }
  if (absl::Status s = CheckAlpha(alpha); !s.ok()) return s;
  const double factor = std::sqrt(lambda_n / lambda2);
  return Interval{DiameterLowerBound(lambda2, n),
                  DiameterUpperBound(factor, alpha, n)};
}

absl::StatusOr<Interval> MeanDistanceBoundsExact(double lambda2,
                                                 double lambda_n, int n,
                                                 double alpha) {
  if (absl::Status s = CheckSpectralArguments(lambda2, lambda_n, n); !s.ok()) {
    return s;
  }
  if (absl::Status s = CheckAlpha(alpha); !s.ok()) return s;
  const double factor = std::sqrt(lambda_n / lambda2);
  return Interval{MeanDistanceLowerBound(lambda2, n),
                  MeanDistanceUpperBound(factor, alpha, n)};
}

double MinimizingAlpha(BoundKind kind, double spectral_factor, int n) {
  auto upper = [&](double alpha) {
    return kind == BoundKind::kDiameter
               ? DiameterUpperBound(spectral_factor, alpha, n)
               : MeanDistanceUpperBound(spectral_factor, alpha, n);
  };
  const double log_lo = std::log(kAlphaMin);
  const double log_hi = std::log(kAlphaMax);
  std::vector<double> grid(kAlphaScanPoints);
  int best = 0;
  double best_value = HUGE_VAL;
  for (int i = 0; i < kAlphaScanPoints; ++i) {
    grid[i] = std::exp(log_lo + (log_hi - log_lo) * i / (kAlphaScanPoints - 1));
    const double value = upper(grid[i]);
    if (value < best_value) {
      best_value = value;
      best = i;
    }
  }
  const double lo = grid[std::max(best - 1, 0)];
  const double hi = grid[std::min(best + 1, kAlphaScanPoints - 1)];
  const double refined = GoldenSectionMinimum(upper, lo, hi, kAlphaTolerance);
  return upper(refined) <= best_value ? refined : grid[best];
}

absl::StatusOr<double> OptimizeAlpha(BoundKind kind, double lambda2,
                                     double lambda_n, int n) {
  if (absl::Status s = CheckSpectralArguments(lambda2, lambda_n, n); !s.ok()) {
    return s;
  }
  return MinimizingAlpha(kind, std::sqrt(lambda_n / lambda2), n);
}

absl::StatusOr<double> ExpectedLambda2(double lambda2, double b, double n) {
  if (absl::Status s = CheckDistributionArguments(lambda2, b, n); !s.ok()) {
    return s;
  }
  const double c = NormalizerCUnchecked(lambda2, b, n);
  const double far = std::exp(-(n - lambda2) / b);
  return (2.0 * lambda2 + b * std::exp(-lambda2 / b) - b * far - n * far) /
         (2.0 * c);
}

absl::StatusOr<double> ExpectedInverseSqrtLambda2(double lambda2, double b,
                                                  double n) {
  if (absl::Status s = CheckDistributionArguments(lambda2, b, n); !s.ok()) {
    return s;
  }
  const double c = NormalizerCUnchecked(lambda2, b, n);
  const double below = 2.0 * Dawson(std::sqrt(lambda2 / b));
  const double above =
      ScaledUpperIncompleteGammaHalf(lambda2 / b) -
      std::exp(-(n - lambda2) / b) * ScaledUpperIncompleteGammaHalf(n / b);
  return std::sqrt(b) * (below + above) / (2.0 * b * c);
}

std::string_view BoundModeName(BoundMode mode) {
  return mode == BoundMode::kExact ? "exact" : "expected";
}

absl::StatusOr<PropertyBoundReport> ExactBounds(double lambda2,
                                                double lambda_n, int n,
                                                std::optional<double> alpha) {
  if (absl::Status s = CheckSpectralArguments(lambda2, lambda_n, n); !s.ok()) {
    return s;
  }
  if (alpha.has_value()) {
    if (absl::Status s = CheckAlpha(*alpha); !s.ok()) return s;
  }
  const double factor = std::sqrt(lambda_n / lambda2);
  PropertyBoundReport report;
  report.mode = BoundMode::kExact;
  report.lambda2 = lambda2;
  report.lambda_n = lambda_n;
  report.n = n;
  report.alpha_d =
      alpha.value_or(MinimizingAlpha(BoundKind::kDiameter, factor, n));
  report.alpha_rho =
      alpha.value_or(MinimizingAlpha(BoundKind::kMeanDistance, factor, n));
  report.d_lower = DiameterLowerBound(lambda2, n);
  report.d_upper = DiameterUpperBound(factor, report.alpha_d, n);
  report.rho_lower = MeanDistanceLowerBound(lambda2, n);
  report.rho_upper = MeanDistanceUpperBound(factor, report.alpha_rho, n);
  return report;
}

absl::StatusOr<PropertyBoundReport> ExpectedBounds(
    double lambda2, double b, double lambda_n, int n,
    std::optional<double> alpha) {
  if (absl::Status s = CheckSpectralArguments(lambda2, lambda_n, n); !s.ok()) {
    return s;
  }
  if (alpha.has_value()) {
    if (absl::Status s = CheckAlpha(*alpha); !s.ok()) return s;
  }
  absl::StatusOr<double> mean = ExpectedLambda2(lambda2, b, n);
  if (!mean.ok()) return mean.status();
  absl::StatusOr<double> inv_sqrt = ExpectedInverseSqrtLambda2(lambda2, b, n);
  if (!inv_sqrt.ok()) return inv_sqrt.status();

  const double factor = std::sqrt(lambda_n) * *inv_sqrt;
  PropertyBoundReport report;
  report.mode = BoundMode::kExpected;
  report.lambda2 = lambda2;
  report.lambda_n = lambda_n;
  report.n = n;
  report.b = b;
  report.expected_lambda2 = *mean;
  report.expected_inverse_sqrt_lambda2 = *inv_sqrt;
  report.alpha_d =
      alpha.value_or(MinimizingAlpha(BoundKind::kDiameter, factor, n));
  report.alpha_rho =
      alpha.value_or(MinimizingAlpha(BoundKind::kMeanDistance, factor, n));
  report.d_lower = DiameterLowerBound(*mean, n);
  report.d_upper = DiameterUpperBound(factor, report.alpha_d, n);
  report.rho_lower = MeanDistanceLowerBound(*mean, n);
  report.rho_upper = MeanDistanceUpperBound(factor, report.alpha_rho, n);
  return report;
}

int MinDegreeInference(double lambda2, int n, double tol) {
  const double bound = (n - 1) * lambda2 / n;
  return std::max(0, static_cast<int>(std::ceil(bound - tol)));
}

}  // namespace privconn
