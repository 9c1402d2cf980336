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

#include "privconn/bounded_laplace.h"

#include <algorithm>
#include <cmath>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace privconn {
namespace {

absl::Status CheckArguments(double center, double b, double upper) {
  if (!(b > 0.0) || !std::isfinite(b)) {
    return absl::InvalidArgumentError(
        absl::StrCat("scale b must be positive and finite, got ", b));
  }
  if (!(upper > 0.0) || !std::isfinite(upper)) {
    return absl::InvalidArgumentError(
        absl::StrCat("support upper bound must be positive, got ", upper));
  }
  if (!(center >= 0.0 && center <= upper)) {
    return absl::OutOfRangeError(absl::StrCat(
        "center ", center, " is outside the support [0, ", upper, "]"));
  }
  return absl::OkStatus();
}

}  // namespace

double NormalizerCUnchecked(double center, double b, double upper) {
  return -0.5 * (std::expm1(-center / b) + std::expm1(-(upper - center) / b));
}

absl::StatusOr<double> NormalizerC(double center, double b, double upper) {
  if (absl::Status s = CheckArguments(center, b, upper); !s.ok()) return s;
  return NormalizerCUnchecked(center, b, upper);
}

absl::StatusOr<BoundedLaplace> BoundedLaplace::Create(double center, double b,
                                                      double upper) {
  if (absl::Status s = CheckArguments(center, b, upper); !s.ok()) return s;
  return BoundedLaplace(center, b, upper,
                        NormalizerCUnchecked(center, b, upper));
}

BoundedLaplace::BoundedLaplace(double center, double b, double upper,
                               double normalizer)
    : center_(center),
      scale_(b),
      upper_(upper),
      normalizer_(normalizer),
      mass_below_center_(-std::expm1(-center / b)) {}

double BoundedLaplace::Pdf(double x) const {
  if (x < 0.0 || x > upper_) return 0.0;
  return std::exp(-std::fabs(x - center_) / scale_) /
         (2.0 * scale_ * normalizer_);
}

double BoundedLaplace::Cdf(double x) const {
  if (x <= 0.0) return 0.0;
  if (x >= upper_) return 1.0;
  const double two_c = 2.0 * normalizer_;
  if (x <= center_) {
    // (exp((x - c) / b) - exp(-c / b)) / 2C
    return std::exp(-center_ / scale_) * std::expm1(x / scale_) / two_c;
  }
  return (mass_below_center_ - std::expm1(-(x - center_) / scale_)) / two_c;
}

double BoundedLaplace::InverseCdf(double u) const {
  const double w = 2.0 * normalizer_ * u;
  double x;
  if (w <= mass_below_center_) {
    // exp(-c / b) * expm1(x / b) = w
    x = scale_ * std::log1p(w * std::exp(center_ / scale_));
    if (!std::isfinite(x)) {
      x = center_ + scale_ * std::log(w + std::exp(-center_ / scale_));
    }
  } else {
    x = center_ - scale_ * std::log1p(-(w - mass_below_center_));
  }
  return std::clamp(x, 0.0, upper_);
}

}  // namespace privconn
