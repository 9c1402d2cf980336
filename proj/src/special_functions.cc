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

#include "privconn/special_functions.h"

#include <cmath>
#include <limits>
#include <numbers>

namespace privconn {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kSqrtPi = 1.7724538509055160273;
constexpr int kMaxTerms = 100000;

// Switch point between the erfi power series and the Dawson asymptotic
// expansion. At x = 6 the smallest asymptotic term is ~e^-36.
constexpr double kDawsonAsymptoticStart = 6.0;

// sum_k x^(k+1/2) / ((1/2)(3/2)...(k+1/2)), i.e. e^x * lower gamma(1/2, x).
double LowerGammaHalfSeriesScaled(double x) {
  double term = 2.0 * std::sqrt(x);  // x^(1/2) / (1/2)
  double sum = term;
  for (int k = 1; k < kMaxTerms; ++k) {
    term *= x / (k + 0.5);
    sum += term;
    if (term < sum * kEps) break;
  }
  return sum;
}

// x^(1/2) times the continued fraction for Gamma(1/2, x) e^x x^(-1/2).
double UpperGammaHalfContinuedFractionScaled(double x) {
  constexpr double a = 0.5;
  constexpr double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < kMaxTerms; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < kEps) break;
  }
  return std::sqrt(x) * h;
}

// sum_k x^(2k+1) / (k! (2k+1)); all terms positive.
double ErfiSeriesSum(double x) {
  const double x2 = x * x;
  double power = x;  // x^(2k+1) / k!
  double sum = x;
  for (int k = 1; k < kMaxTerms; ++k) {
    power *= x2 / k;
    const double term = power / (2 * k + 1);
    sum += term;
    if (term < sum * kEps) break;
  }
  return sum;
}

// D(x) ~ (1 / 2x) sum_k (2k-1)!! / (2x^2)^k, truncated at its smallest term.
double DawsonAsymptotic(double x) {
  const double inv = 1.0 / (2.0 * x * x);
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < kMaxTerms; ++k) {
    const double next = term * (2 * k - 1) * inv;
    if (next >= term) break;
    term = next;
    sum += term;
    if (term < sum * kEps) break;
  }
  return sum / (2.0 * x);
}

}  // namespace

double ScaledUpperIncompleteGammaHalf(double x) {
  if (x < 0.0 || std::isnan(x)) return std::numeric_limits<double>::quiet_NaN();
  if (x == 0.0) return kSqrtPi;
  if (x < 1.0) {
    return kSqrtPi * std::exp(x) - LowerGammaHalfSeriesScaled(x);
  }
  if (std::isinf(x)) return 0.0;
  return UpperGammaHalfContinuedFractionScaled(x);
}

double UpperIncompleteGammaHalf(double x) {
  if (x < 0.0 || std::isnan(x)) return std::numeric_limits<double>::quiet_NaN();
  if (x < 1.0) {
    return kSqrtPi - std::exp(-x) * LowerGammaHalfSeriesScaled(x);
  }
  return std::exp(-x) * ScaledUpperIncompleteGammaHalf(x);
}

double Dawson(double x) {
  if (x < 0.0 || std::isnan(x)) return std::numeric_limits<double>::quiet_NaN();
  if (x < kDawsonAsymptoticStart) return std::exp(-x * x) * ErfiSeriesSum(x);
  if (std::isinf(x)) return 0.0;
  return DawsonAsymptotic(x);
}

double Erfi(double x) {
  if (x < 0.0 || std::isnan(x)) return std::numeric_limits<double>::quiet_NaN();
  constexpr double kTwoOverSqrtPi = 2.0 / kSqrtPi;
  if (x < kDawsonAsymptoticStart) return kTwoOverSqrtPi * ErfiSeriesSum(x);
  return kTwoOverSqrtPi * std::exp(x * x) * DawsonAsymptotic(x);
}

}  // namespace privconn
