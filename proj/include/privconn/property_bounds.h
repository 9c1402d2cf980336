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

#ifndef PRIVCONN_PROPERTY_BOUNDS_H_
#define PRIVCONN_PROPERTY_BOUNDS_H_

#include <optional>
#include <string_view>

#include "absl/status/statusor.h"

namespace privconn {

// Spectral bounds on the diameter d and mean distance rho of a graph on n
// nodes. For lambda2 > 0 and any alpha > 1:
//
//   4 / (n lambda2) <= d <= (2 s f(alpha) + 2) log_alpha(n/2)
//   2 / ((n-1) lambda2) + (n-2) / (2(n-1)) <= rho
//       <= (s f(alpha) + 1) (n / (n-1)) (1/2 + log_alpha(n/2))
//
// where s = sqrt(lambda_n / lambda2) and f(alpha) = sqrt((alpha^2-1)/(4 alpha)).
// The upper forms carry no ceilings; for n <= 3 and large alpha they can fall
// below the true diameter.

struct Interval {
  double lower = 0.0;
  double upper = 0.0;
};

enum class BoundKind { kDiameter, kMeanDistance };

// The upper bounds depend on the spectrum only through the factor s above
// (which becomes sqrt(lambda_n) E[1/sqrt(lambda2~)] for expected bounds).
double DiameterUpperBound(double spectral_factor, double alpha, int n);
double MeanDistanceUpperBound(double spectral_factor, double alpha, int n);
double DiameterLowerBound(double lambda2, int n);
double MeanDistanceLowerBound(double lambda2, int n);

// OutOfRange for lambda2 <= 0; InvalidArgument for alpha <= 1, n < 2 or
// lambda_n < lambda2.
absl::StatusOr<Interval> DiameterBoundsExact(double lambda2, double lambda_n,
                                             int n, double alpha);
absl::StatusOr<Interval> MeanDistanceBoundsExact(double lambda2,
                                                 double lambda_n, int n,
                                                 double alpha);

inline constexpr double kAlphaMin = 1.0 + 1e-6;
inline constexpr double kAlphaMax = 1e3;
inline constexpr double kAlphaTolerance = 1e-6;

// alpha in [kAlphaMin, kAlphaMax] minimizing the chosen upper bound for a
// given spectral factor: a log-spaced scan brackets the minimum, then
// golden-section search refines it to kAlphaTolerance.
double MinimizingAlpha(BoundKind kind, double spectral_factor, int n);

absl::StatusOr<double> OptimizeAlpha(BoundKind kind, double lambda2,
                                     double lambda_n, int n);

// E[lambda2~] for the bounded Laplace law centered at lambda2 on [0, n]:
//   (2 lambda2 + b e^{-lambda2/b} - b e^{-(n-lambda2)/b}
//    - n e^{-(n-lambda2)/b}) / (2 C).
absl::StatusOr<double> ExpectedLambda2(double lambda2, double b, double n);

// E[1/sqrt(lambda2~)] = (1 / (2 b C)) (sqrt(pi b) e^{-l/b} erfi(sqrt(l/b))
//                        + sqrt(b) e^{l/b} (Gamma(1/2, l/b) - Gamma(1/2, n/b)))
// with l = lambda2, evaluated through the Dawson integral and the scaled
// incomplete gamma so that it stays finite for b -> 0. Defined at lambda2 = 0.
absl::StatusOr<double> ExpectedInverseSqrtLambda2(double lambda2, double b,
                                                  double n);

enum class BoundMode { kExact, kExpected };
std::string_view BoundModeName(BoundMode mode);

struct PropertyBoundReport {
  BoundMode mode = BoundMode::kExact;
  double d_lower = 0.0;
  double d_upper = 0.0;
  double rho_lower = 0.0;
  double rho_upper = 0.0;
  double alpha_d = 0.0;
  double alpha_rho = 0.0;
  // Inputs. b is 0 in exact mode.
  double lambda2 = 0.0;
  double lambda_n = 0.0;
  int n = 0;
  double b = 0.0;
  // Expectations used by the expected mode (0 otherwise).
  double expected_lambda2 = 0.0;
  double expected_inverse_sqrt_lambda2 = 0.0;
};

// Distance bounds at a known lambda2. alpha defaults to the minimizer of each
// upper bound; an override applies to both.
absl::StatusOr<PropertyBoundReport> ExactBounds(
    double lambda2, double lambda_n, int n,
    std::optional<double> alpha = std::nullopt);

// Expectation bounds under the private lambda2~ (bounded Laplace centered at
// lambda2 with scale b on [0, n]):
//   4 / (n E[l~])  and  2/((n-1) E[l~]) + (n-2)/(2(n-1))  for the lower ones,
//   the upper forms with s = sqrt(lambda_n) E[1/sqrt(l~)].
// alpha defaults to the minimizer of each expected upper bound.
absl::StatusOr<PropertyBoundReport> ExpectedBounds(
    double lambda2, double b, double lambda_n, int n,
    std::optional<double> alpha = std::nullopt);

// Certified lower bound on the minimum degree from lambda2 <= n d_min/(n-1):
// ceil((n-1) lambda2 / n), with `tol` absorbed before rounding up so that an
// eigenvalue computed slightly high does not bump the result.
int MinDegreeInference(double lambda2, int n, double tol = 1e-9);

}  // namespace privconn

#endif  // PRIVCONN_PROPERTY_BOUNDS_H_
