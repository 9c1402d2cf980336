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

#ifndef PRIVCONN_BOUNDED_LAPLACE_H_
#define PRIVCONN_BOUNDED_LAPLACE_H_

#include "absl/status/statusor.h"
#include "privconn/random.h"

namespace privconn {

// Mass that a Laplace(center, b) law puts on [0, upper]:
//   C = 1 - (exp(-center / b) + exp(-(upper - center) / b)) / 2.
// OutOfRange when center is outside [0, upper]; InvalidArgument for b <= 0.
absl::StatusOr<double> NormalizerC(double center, double b, double upper);

// Same closed form without argument checks. Evaluated with expm1 so it keeps
// full relative precision when b is large and C is small.
double NormalizerCUnchecked(double center, double b, double upper);

// Laplace(center, b) truncated to [0, upper] and renormalized:
//   pdf(x) = exp(-|x - center| / b) / (2 b C)  on [0, upper], 0 elsewhere.
// Immutable; safe to share between threads.
class BoundedLaplace {
 public:
  static absl::StatusOr<BoundedLaplace> Create(double center, double b,
                                               double upper);

  double center() const { return center_; }
  double scale() const { return scale_; }
  double upper() const { return upper_; }
  double normalizer() const { return normalizer_; }

  double Pdf(double x) const;
  // 0 below the support, 1 above it.
  double Cdf(double x) const;
  // Closed-form inverse of Cdf for u in (0, 1); the result is in [0, upper].
  double InverseCdf(double u) const;
  // Inverse-transform draw.
  double Sample(RandomStream& rng) const { return InverseCdf(rng.Uniform01()); }

 private:
  BoundedLaplace(double center, double b, double upper, double normalizer);

  double center_;
  double scale_;
  double upper_;
  double normalizer_;
  // Cdf(center) * 2C = 1 - exp(-center / b).
  double mass_below_center_;
};

}  // namespace privconn

#endif  // PRIVCONN_BOUNDED_LAPLACE_H_
