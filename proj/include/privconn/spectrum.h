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

#ifndef PRIVCONN_SPECTRUM_H_
#define PRIVCONN_SPECTRUM_H_

#include <vector>

#include "absl/status/statusor.h"
#include "privconn/graph.h"

namespace privconn {

inline constexpr double kDefaultEigenTolerance = 1e-9;
inline constexpr int kMaxEigenIterations = 10000;

// Laplacian spectrum in nondecreasing order. lambda2 is the algebraic
// connectivity; both summary values are clamped into [0, n].
struct SpectralSummary {
  std::vector<double> eigenvalues;
  double lambda2 = 0.0;
  double lambda_n = 0.0;
};

// Eigenvalues of a symmetric matrix, ascending. Householder reduction to
// tridiagonal form followed by implicit QL with Wilkinson shifts. An
// off-diagonal entry is deflated once it drops below machine precision
// relative to its neighbours or below 1e-3 * tol, so every eigenvalue is
// accurate to well within tol. Internal error (with the remaining residual)
// after max_iterations QL sweeps in total.
absl::StatusOr<std::vector<double>> SymmetricEigenvalues(
    const SquareMatrix& a, double tol = kDefaultEigenTolerance,
    int max_iterations = kMaxEigenIterations);

// Requires n >= 2.
absl::StatusOr<SpectralSummary> Spectrum(const Graph& g,
                                         double tol = kDefaultEigenTolerance);

// Convenience: Spectrum(g).lambda2.
absl::StatusOr<double> AlgebraicConnectivity(const Graph& g);

}  // namespace privconn

#endif  // PRIVCONN_SPECTRUM_H_
