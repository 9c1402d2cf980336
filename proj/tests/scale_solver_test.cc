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

#include "boost/math/tools/roots.hpp"
#include "gtest/gtest.h"
#include "oracles/quadrature_oracle.h"
#include "privconn/bounded_laplace.h"

namespace privconn {
namespace {

TEST(PrivacyParamsTest, Validation) {
  EXPECT_TRUE(PrivacyParams{}.Validate().ok());
  EXPECT_FALSE(PrivacyParams::Create(0.0, 0.05, 1).ok());
  EXPECT_FALSE(PrivacyParams::Create(-1.0, 0.05, 1).ok());
  EXPECT_FALSE(PrivacyParams::Create(0.4, 0.0, 1).ok());
  EXPECT_FALSE(PrivacyParams::Create(0.4, 1.0, 1).ok());
  EXPECT_FALSE(PrivacyParams::Create(0.4, 0.05, 0).ok());
  EXPECT_EQ(*PrivacyParams::Create(0.4, 0.05, 1), PrivacyParams{});
}

TEST(DeltaCTest, AtLeastOneOnHalfSupport) {
  for (double b : {0.1, 1.0, 7.0, 100.0}) {
    for (int a = 1; a <= 2; ++a) {
      EXPECT_GE(*DeltaC(b, a, 10.0), 1.0);
    }
  }
  EXPECT_EQ(DeltaC(1.0, 6, 10.0).status().code(),
            absl::StatusCode::kOutOfRange);
}

// Reference root by Boost's TOMS 748 on b * (eps - log(C_{2A}/C_0) -
// log(1 - delta)) - 2A, with both normalizers integrated numerically.
double ReferenceScale(double eps, double delta, int a, double n) {
  auto h = [&](double b) {
    const double ratio = oracle::NormalizerByQuadrature(2.0 * a, b, n) /
                         oracle::NormalizerByQuadrature(0.0, b, n);
    return b * (eps - std::log(ratio) - std::log1p(-delta)) - 2.0 * a;
  };
  boost::uintmax_t iters = 200;
  auto r = boost::math::tools::toms748_solve(
      h, 0.02 * a / eps, 200.0 * a / eps,
      boost::math::tools::eps_tolerance<double>(50), iters);
  return 0.5 * (r.first + r.second);
}

TEST(SolveScaleTest, DefaultRegimeMatchesIndependentRoot) {
  const double b = *SolveScale(PrivacyParams{}, 10.0);
  EXPECT_NEAR(b, ReferenceScale(0.4, 0.05, 1, 10.0), 2e-6);
  // Published bisection of the same inequality (diffprivlib's bounded
  // Laplace scale search) gives 7.583003219 for these parameters.
  EXPECT_NEAR(b, 7.583003219, 2e-6);
}

TEST(SolveScaleTest, SweepMatchesIndependentRoot) {
  for (double eps : {0.1, 0.25, 0.7, 1.5, 2.0}) {
    for (double n : {6.0, 10.0, 30.0}) {
      for (int a : {1, 2}) {
        const PrivacyParams p{eps, 0.05, a};
        absl::StatusOr<double> b = SolveScale(p, n);
        ASSERT_TRUE(b.ok()) << b.status();
        EXPECT_NEAR(*b, ReferenceScale(eps, 0.05, a, n), 2e-6)
            << eps << " " << n << " " << a;
      }
    }
  }
}

TEST(SolveScaleTest, ReturnsFeasibleMinimalScale) {
  const PrivacyParams p;
  const double b = *SolveScale(p, 10.0);
  EXPECT_GE(ScaleInequalitySlack(b, p, 10.0), 0.0);
  EXPECT_LT(ScaleInequalitySlack(b - 2 * kScaleTolerance, p, 10.0), 0.0);
}

TEST(SolveScaleTest, MonotoneInEpsilonAndAdjacency) {
  double previous = HUGE_VAL;
  for (double eps = 0.1; eps <= 2.0; eps += 0.1) {
    const double b = *SolveScale(PrivacyParams{eps, 0.05, 1}, 30.0);
    EXPECT_LT(b, previous);
    previous = b;
  }
  EXPECT_LT(*SolveScale(PrivacyParams{0.4, 0.05, 1}, 30.0),
            *SolveScale(PrivacyParams{0.4, 0.05, 2}, 30.0));
}

TEST(SolveScaleTest, InfeasibleAndInvalid) {
  EXPECT_EQ(SolveScale(PrivacyParams{0.4, 0.05, 3}, 5.0).status().code(),
            absl::StatusCode::kFailedPrecondition);
  EXPECT_EQ(SolveScale(PrivacyParams{0.0, 0.05, 1}, 10.0).status().code(),
            absl::StatusCode::kInvalidArgument);
}

TEST(SolveScaleTest, SlackIsMinusInfinityWhereDenominatorFails) {
  // Tiny epsilon and delta: the denominator is negative for small b.
  const PrivacyParams p{1e-3, 1e-6, 1};
  EXPECT_LE(PrivacyDenominator(0.5, p, 10.0), 0.0);
  EXPECT_EQ(ScaleInequalitySlack(0.5, p, 10.0), -HUGE_VAL);
}

// With the solved b, the exact hockey-stick divergence between the output
// laws of any two centers at most 2A apart stays below delta.
TEST(SolveScaleTest, SolvedScaleSatisfiesExactDpInequality) {
  for (double eps : {0.2, 0.4, 1.0}) {
    const PrivacyParams p{eps, 0.05, 1};
    const double n = 10.0;
    const double b = *SolveScale(p, n);
    const double ratio = std::exp(eps);
    for (double c = 0.0; c <= n; c += 0.5) {
      for (double shift : {-2.0, -1.0, 1.0, 2.0}) {
        const double c2 = c + shift;
        if (c2 < 0.0 || c2 > n) continue;
        const BoundedLaplace p1 = *BoundedLaplace::Create(c, b, n);
        const BoundedLaplace p2 = *BoundedLaplace::Create(c2, b, n);
        auto excess = [&](double x) {
          return std::max(0.0, p1.Pdf(x) - ratio * p2.Pdf(x));
        };
        const double lo = std::min(c, c2), hi = std::max(c, c2);
        const double divergence = oracle::Integrate(excess, 0.0, lo) +
                                  oracle::Integrate(excess, lo, hi) +
                                  oracle::Integrate(excess, hi, n);
        EXPECT_LE(divergence, p.delta) << eps << " " << c << " " << c2;
      }
    }
  }
}

}  // namespace
}  // namespace privconn
