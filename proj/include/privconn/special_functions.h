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

#ifndef PRIVCONN_SPECIAL_FUNCTIONS_H_
#define PRIVCONN_SPECIAL_FUNCTIONS_H_

namespace privconn {

// Upper incomplete gamma at s = 1/2: integral_x^inf t^(-1/2) e^(-t) dt, for
// x >= 0. Series for the lower function below x = 1, modified Lentz continued
// fraction above. Relative accuracy ~1e-14.
double UpperIncompleteGammaHalf(double x);

// exp(x) * UpperIncompleteGammaHalf(x), without the overflow/underflow of
// forming the two factors separately.
double ScaledUpperIncompleteGammaHalf(double x);

// Imaginary error function (2 / sqrt(pi)) integral_0^x exp(t^2) dt, x >= 0.
// +inf once the result exceeds the double range (x > ~26.6).
double Erfi(double x);

// Dawson integral exp(-x^2) integral_0^x exp(t^2) dt, x >= 0; equals
// (sqrt(pi) / 2) exp(-x^2) Erfi(x) but stays finite for all x.
double Dawson(double x);

}  // namespace privconn

#endif  // PRIVCONN_SPECIAL_FUNCTIONS_H_
