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

#include <cmath>
#include <numbers>
#include <vector>

#include "gtest/gtest.h"
#include "oracles/quadrature_oracle.h"
#include "privconn/bounded_laplace.h"
#include "privconn/graph.h"
#include "privconn/random.h"
#include "privconn/scale_solver.h"
#include "privconn/spectrum.h"

namespace privconn {
namespace {

const double kAlphas[] = {1.5, 2.0, std::numbers::e, 4.0};

TEST(ExpectedLambda2Test, MatchesQuadrature) {
  RandomStream rng(31);
  for (int i = 0; i < 300; ++i) {
    const double n = 2.0 + 38.0 * rng.Uniform01();
    const double l2 = n * rng.Uniform01();
    const double b = std::exp(std::log(0.05) + rng.Uniform01() * std::log(4e3));
    const double expected = oracle::ExpectationByQuadrature(
        [](double x) { return x; }, l2, b, n);
    EXPECT_NEAR(*ExpectedLambda2(l2, b, n), expected, 1e-10 * n)
        << l2 << " " << b << " " << n;
  }
}

TEST(ExpectedLambda2Test, SymmetricCenterIsExact) {
  for (double n : {4.0, 10.0, 30.0}) {
    for (double b : {0.1, 1.0, 7.39, 1e3}) {
      EXPECT_NEAR(*ExpectedLambda2(n / 2, b, n), n / 2, 1e-12);
    }
  }
}

TEST(ExpectedLambda2Test, InSupportAndMonotone) {
  for (double b : {0.5, 3.0, 20.0}) {
    double previous = -1.0;
    for (double l2 = 0.0; l2 <= 10.0; l2 += 0.05) {
      const double m = *ExpectedLambda2(l2, b, 10.0);
      EXPECT_GE(m, 0.0);
      EXPECT_LE(m, 10.0);
      EXPECT_GE(m, previous - 1e-12);
      previous = m;
    }
  }
}

TEST(ExpectedInverseSqrtTest, MatchesQuadrature) {
  RandomStream rng(32);
  for (int i = 0; i < 300; ++i) {
    const double n = 2.0 + 38.0 * rng.Uniform01();
    const double l2 = n * rng.Uniform01();
    const double b = std::exp(std::log(0.05) + rng.Uniform01() * std::log(4e3));
    const double expected = oracle::InverseSqrtMomentByQuadrature(l2, b, n);
    EXPECT_NEAR(*ExpectedInverseSqrtLambda2(l2, b, n) / expected, 1.0, 1e-9)
        << l2 << " " << b << " " << n;
  }
  EXPECT_NEAR(*ExpectedInverseSqrtLambda2(0.0, 2.0, 10.0),
              oracle::InverseSqrtMomentByQuadrature(0.0, 2.0, 10.0), 1e-9);
}

TEST(ExpectedInverseSqrtTest, JensenDirection) {
  for (double l2 : {0.1, 1.0, 4.0, 9.0}) {
    for (double b : {0.3, 2.0, 7.39}) {
      EXPECT_GE(*ExpectedInverseSqrtLambda2(l2, b, 10.0),
                1.0 / std::sqrt(*ExpectedLambda2(l2, b, 10.0)));
    }
  }
}

TEST(ExpectedInverseSqrtTest, CollapsesToPointMass) {
  EXPECT_NEAR(*ExpectedInverseSqrtLambda2(2.0, 1e-6, 10.0), 1.0 / std::sqrt(2.0),
              1e-5);
  EXPECT_NEAR(*ExpectedLambda2(2.0, 1e-6, 10.0), 2.0, 1e-5);
}

TEST(ExpectedInverseSqrtTest, MatchesMonteCarlo) {
  const double l2 = 1.0, b = 7.39, n = 10.0;
  const BoundedLaplace law = *BoundedLaplace::Create(l2, b, n);
  RandomStream rng(5);
  const int m = 400000;
  double sum = 0.0, sum_sq = 0.0;
  for (int i = 0; i < m; ++i) {
    const double v = 1.0 / std::sqrt(law.Sample(rng));
    sum += v;
    sum_sq += v * v;
  }
  const double mean = sum / m;
  const double se = std::sqrt((sum_sq / m - mean * mean) / m);
  EXPECT_NEAR(*ExpectedInverseSqrtLambda2(l2, b, n), mean, 3.0 * se);
}

TEST(ExpectedBoundsTest, LowerBoundJensenAgainstClippedQuadrature) {
  const double eps0 = 1e-6;
  for (double l2 : {0.5, 1.0, 5.0}) {
    for (double b : {0.5, 7.39}) {
      const double n = 10.0;
      const double lhs = 4.0 / (n * *ExpectedLambda2(l2, b, n));
      const double rhs = oracle::ExpectationByQuadrature(
          [&](double x) { return 4.0 / (n * std::max(x, eps0)); }, l2, b, n);
      EXPECT_LE(lhs, rhs);
    }
  }
}

TEST(ExpectedBoundsTest, LowerBoundsBelowMonteCarloMeans) {
  const double l2 = 1.0, b = 7.39;
  const int n = 10;
  const PropertyBoundReport r = *ExpectedBounds(l2, b, n, n);
  const BoundedLaplace law = *BoundedLaplace::Create(l2, b, n);
  RandomStream rng(6);
  double d = 0.0, rho = 0.0;
  const int m = 100000;
  for (int i = 0; i < m; ++i) {
    const double x = law.Sample(rng);
    d += DiameterLowerBound(x, n);
    rho += MeanDistanceLowerBound(x, n);
  }
  EXPECT_LE(r.d_lower, d / m);
  EXPECT_LE(r.rho_lower, rho / m);
}

TEST(ExpectedBoundsTest, ConvergeToExactAsScaleVanishes) {
  const PropertyBoundReport exact = *ExactBounds(1.0, 10.0, 10);
  const PropertyBoundReport expected = *ExpectedBounds(1.0, 1e-7, 10.0, 10);
  EXPECT_NEAR(expected.d_lower, exact.d_lower, 1e-5);
  EXPECT_NEAR(expected.d_upper, exact.d_upper, 1e-4);
  EXPECT_NEAR(expected.rho_lower, exact.rho_lower, 1e-5);
  EXPECT_NEAR(expected.rho_upper, exact.rho_upper, 1e-4);
}

TEST(ExpectedBoundsTest, GapsShrinkWithEpsilon) {
  const int n = 30;
  const PropertyBoundReport exact = *ExactBounds(1.0, n, n);
  auto gaps = [&](double eps) {
    const double b = *SolveScale(PrivacyParams{eps, 0.05, 1}, n);
    const PropertyBoundReport e = *ExpectedBounds(1.0, b, n, n);
    return std::vector<double>{std::abs(e.d_lower - exact.d_lower),
                               std::abs(e.d_upper - exact.d_upper),
                               std::abs(e.rho_lower - exact.rho_lower),
                               std::abs(e.rho_upper - exact.rho_upper)};
  };
  const std::vector<double> loose = gaps(0.1);
  const std::vector<double> tight = gaps(2.0);
  for (int k = 0; k < 4; ++k) EXPECT_LT(tight[k], loose[k]) << k;
}

TEST(ExactBoundsTest, Errors) {
  EXPECT_EQ(DiameterBoundsExact(0.0, 4.0, 4, 2.0).status().code(),
            absl::StatusCode::kOutOfRange);
  EXPECT_EQ(DiameterBoundsExact(1.0, 4.0, 4, 1.0).status().code(),
            absl::StatusCode::kInvalidArgument);
  EXPECT_EQ(MeanDistanceBoundsExact(2.0, 1.0, 4, 2.0).status().code(),
            absl::StatusCode::kInvalidArgument);
  EXPECT_EQ(ExactBounds(1.0, 4.0, 1).status().code(),
            absl::StatusCode::kInvalidArgument);
  EXPECT_EQ(ExpectedLambda2(1.0, 0.0, 10.0).status().code(),
            absl::StatusCode::kInvalidArgument);
  EXPECT_EQ(ExpectedInverseSqrtLambda2(11.0, 1.0, 10.0).status().code(),
            absl::StatusCode::kOutOfRange);
}

TEST(ExactBoundsTest, CompleteGraphValues) {
  // K_n: lambda2 = lambda_n = n, s = 1.
  const Interval d = *DiameterBoundsExact(6.0, 6.0, 6, 2.0);
  EXPECT_DOUBLE_EQ(d.lower, 4.0 / 36.0);
  EXPECT_DOUBLE_EQ(d.upper,
                   (2.0 * std::sqrt(3.0 / 8.0) + 2.0) * std::log(3.0) /
                       std::log(2.0));
  const Interval rho = *MeanDistanceBoundsExact(6.0, 6.0, 6, 2.0);
  EXPECT_DOUBLE_EQ(rho.lower, 2.0 / 30.0 + 4.0 / 10.0);
}

// Exhaustive sandwich check on connected graphs with 4 to 6 nodes.
TEST(ExactBoundsTest, ContainCombinatorialValuesForFourToSixNodes) {
  for (int n = 4; n <= 6; ++n) {
    const uint64_t count = uint64_t{1} << (n * (n - 1) / 2);
    for (uint64_t mask = 0; mask < count; ++mask) {
      const Graph g = Graph::FromPairMask(n, mask);
      if (!IsConnected(g)) continue;
      const SpectralSummary s = *Spectrum(g);
      const int d = *DiameterExact(g);
      const double rho = *MeanDistanceExact(g);
      for (double alpha : kAlphas) {
        const Interval di = *DiameterBoundsExact(s.lambda2, s.lambda_n, n, alpha);
        const Interval ri =
            *MeanDistanceBoundsExact(s.lambda2, s.lambda_n, n, alpha);
        EXPECT_LE(di.lower, d + 1e-9) << mask;
        EXPECT_GE(di.upper, d - 1e-9) << mask;
        EXPECT_LE(ri.lower, rho + 1e-9) << mask;
        EXPECT_GE(ri.upper, rho - 1e-9) << mask;
      }
    }
  }
}

// Without ceilings the upper diameter form can undershoot on tiny graphs.
TEST(ExactBoundsTest, DiameterUpperFormFailsOnTinyGraphs) {
  // n = 2: log_alpha(1) = 0 kills the whole bound.
  const Interval k2 = *DiameterBoundsExact(2.0, 2.0, 2, 2.0);
  EXPECT_EQ(k2.upper, 0.0);
  // Path on 3 nodes: lambda2 = 1, lambda_n = 3, diameter 2.
  EXPECT_LT(DiameterBoundsExact(1.0, 3.0, 3, std::numbers::e)->upper, 2.0);
  EXPECT_LT(DiameterBoundsExact(1.0, 3.0, 3, 4.0)->upper, 2.0);
  EXPECT_GE(DiameterBoundsExact(1.0, 3.0, 3, 2.0)->upper, 2.0);
}

TEST(OptimizeAlphaTest, LocalAndGridMinimum) {
  for (double factor : {1.0, 1.7, 3.0, 10.0, 50.0}) {
    for (int n : {5, 10, 30, 100}) {
      for (BoundKind kind : {BoundKind::kDiameter, BoundKind::kMeanDistance}) {
        auto f = [&](double a) {
          return kind == BoundKind::kDiameter
                     ? DiameterUpperBound(factor, a, n)
                     : MeanDistanceUpperBound(factor, a, n);
        };
        const double alpha = MinimizingAlpha(kind, factor, n);
        ASSERT_GE(alpha, kAlphaMin);
        ASSERT_LE(alpha, kAlphaMax);
        const double best = f(alpha);
        for (double a : kAlphas) EXPECT_LE(best, f(a) + 1e-12);
        for (double step : {1e-3, 1e-2, 0.1}) {
          if (alpha - step > 1.0) EXPECT_LE(best, f(alpha - step) + 1e-12);
          EXPECT_LE(best, f(alpha + step) + 1e-12);
        }
        for (int k = 0; k <= 200; ++k) {
          const double a = std::exp(std::log(1.0001) + k * std::log(1e3 / 1.0001) / 200);
          EXPECT_LE(best, f(a) + 1e-9);
        }
      }
    }
  }
}

TEST(OptimizeAlphaTest, ReportUsesOverride) {
  const PropertyBoundReport r = *ExactBounds(1.0, 10.0, 10, 2.0);
  EXPECT_EQ(r.alpha_d, 2.0);
  EXPECT_EQ(r.alpha_rho, 2.0);
  EXPECT_DOUBLE_EQ(r.d_upper, DiameterBoundsExact(1.0, 10.0, 10, 2.0)->upper);
  EXPECT_NEAR(*OptimizeAlpha(BoundKind::kDiameter, 1.0, 10.0, 10),
              ExactBounds(1.0, 10.0, 10)->alpha_d, 1e-12);
  EXPECT_FALSE(ExactBounds(1.0, 10.0, 10, 0.5).ok());
}

TEST(MinDegreeInferenceTest, Values) {
  EXPECT_EQ(MinDegreeInference(2.0, 4), 2);
  EXPECT_EQ(MinDegreeInference(0.0, 4), 0);
  EXPECT_EQ(MinDegreeInference(1.0, 10), 1);
  // A value computed a hair above an integer bound does not round up.
  EXPECT_EQ(MinDegreeInference(4.0 / 3.0 + 1e-12, 4), 1);
}

TEST(MinDegreeInferenceTest, NeverExceedsTrueMinDegreeExhaustive) {
  for (int n = 2; n <= 6; ++n) {
    const uint64_t count = uint64_t{1} << (n * (n - 1) / 2);
    for (uint64_t mask = 0; mask < count; ++mask) {
      const Graph g = Graph::FromPairMask(n, mask);
      EXPECT_LE(MinDegreeInference(*AlgebraicConnectivity(g), n), MinDegree(g))
          << n << " " << mask;
    }
  }
}

}  // namespace
}  // namespace privconn
