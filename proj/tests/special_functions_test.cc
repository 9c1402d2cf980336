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

#include "boost/math/quadrature/gauss_kronrod.hpp"
#include "boost/math/special_functions/gamma.hpp"
#include "gtest/gtest.h"

namespace privconn {
namespace {

constexpr double kRelTol = 1e-10;

double Relative(double got, double want) {
  return std::abs(got - want) / std::abs(want);
}

// Gamma(1/2, x) = 2 integral_{sqrt x}^inf exp(-s^2) ds.
double GammaHalfByQuadrature(double x) {
  auto f = [](double s) { return 2.0 * std::exp(-s * s); };
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
      f, std::sqrt(x), std::numeric_limits<double>::infinity(), 12, 1e-13);
}

// e^{-x^2} integral_0^x e^{t^2} dt = integral_0^x e^{(t - x)(t + x)} dt.
double DawsonByQuadrature(double x) {
  auto f = [x](double t) { return std::exp((t - x) * (t + x)); };
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
      f, 0.0, x, 12, 1e-13);
}

double ErfiByQuadrature(double x) {
  auto f = [](double t) { return std::exp(t * t); };
  return 2.0 / std::sqrt(M_PI) *
         boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
             f, 0.0, x, 12, 1e-13);
}

TEST(SpecialFunctionsTest, GammaHalfMatchesQuadratureAndBoost) {
  for (double x = 0.0; x <= 50.0; x += 0.125) {
    const double got = UpperIncompleteGammaHalf(x);
    EXPECT_LT(Relative(got, GammaHalfByQuadrature(x)), kRelTol) << x;
    if (x > 0.0) {
      EXPECT_LT(Relative(got, boost::math::tgamma(0.5, x)), kRelTol) << x;
    }
  }
  EXPECT_NEAR(UpperIncompleteGammaHalf(0.0), std::sqrt(M_PI), 1e-15);
}

TEST(SpecialFunctionsTest, GammaHalfEqualsScaledErfc) {
  for (double x = 0.0; x <= 50.0; x += 0.37) {
    EXPECT_LT(Relative(UpperIncompleteGammaHalf(x),
                       std::sqrt(M_PI) * std::erfc(std::sqrt(x))),
              kRelTol)
        << x;
  }
}

TEST(SpecialFunctionsTest, ScaledGammaHalf) {
  for (double x : {0.0, 0.5, 1.0, 3.0, 20.0, 50.0}) {
    EXPECT_LT(Relative(ScaledUpperIncompleteGammaHalf(x),
                       std::exp(x) * boost::math::tgamma(0.5, std::max(x, 1e-300))),
              kRelTol)
        << x;
  }
  // No overflow or underflow far out; asymptotically 1/sqrt(x).
  EXPECT_NEAR(ScaledUpperIncompleteGammaHalf(1e6) * std::sqrt(1e6), 1.0, 1e-6);
}

TEST(SpecialFunctionsTest, ErfiMatchesQuadrature) {
  for (double x = 0.0625; x <= 26.0; x += 0.0625) {
    EXPECT_LT(Relative(Erfi(x), ErfiByQuadrature(x)), kRelTol) << x;
  }
  EXPECT_EQ(Erfi(0.0), 0.0);
  EXPECT_EQ(Erfi(30.0), std::numeric_limits<double>::infinity());
}

TEST(SpecialFunctionsTest, DawsonMatchesQuadratureAndErfi) {
  for (double x = 0.0625; x <= 50.0; x += 0.0625) {
    EXPECT_LT(Relative(Dawson(x), DawsonByQuadrature(x)), kRelTol) << x;
    if (x < 20.0) {
      const double via_erfi =
          std::sqrt(M_PI) / 2.0 * std::exp(-x * x) * Erfi(x);
      EXPECT_LT(Relative(Dawson(x), via_erfi), 1e-12) << x;
    }
  }
  // Dawson peak near x = 0.9241 with value 0.5410.
  EXPECT_NEAR(Dawson(0.9241388730), 0.5410442246, 1e-9);
}

}  // namespace
}  // namespace privconn
