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

#include "privconn/spectrum.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"

namespace privconn {
namespace {

struct Tridiagonal {
  std::vector<double> diagonal;
  // off_diagonal[i] couples rows i and i + 1; the last entry is unused.
  std::vector<double> off_diagonal;
};

// Householder reduction of a symmetric matrix, eigenvalues only.
Tridiagonal Tridiagonalize(const SquareMatrix& input) {
  const int n = input.size();
  std::vector<std::vector<double>> a(n, std::vector<double>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = input(i, j);
  }
  std::vector<double> d(n, 0.0);
  std::vector<double> e(n, 0.0);

  for (int i = n - 1; i > 0; --i) {
    const int l = i - 1;
    double h = 0.0;
    if (l > 0) {
      double scale = 0.0;
      for (int k = 0; k <= l; ++k) scale += std::fabs(a[i][k]);
      if (scale == 0.0) {
        e[i] = a[i][l];
      } else {
        for (int k = 0; k <= l; ++k) {
          a[i][k] /= scale;
          h += a[i][k] * a[i][k];
        }
        double f = a[i][l];
        const double g = f >= 0.0 ? -std::sqrt(h) : std::sqrt(h);
        e[i] = scale * g;
        h -= f * g;
        a[i][l] = f - g;
        f = 0.0;
        for (int j = 0; j <= l; ++j) {
          double gj = 0.0;
          for (int k = 0; k <= j; ++k) gj += a[j][k] * a[i][k];
          for (int k = j + 1; k <= l; ++k) gj += a[k][j] * a[i][k];
          e[j] = gj / h;
          f += e[j] * a[i][j];
        }
        const double hh = f / (h + h);
        for (int j = 0; j <= l; ++j) {
          const double fj = a[i][j];
          const double gj = e[j] - hh * fj;
          e[j] = gj;
          for (int k = 0; k <= j; ++k) a[j][k] -= fj * e[k] + gj * a[i][k];
        }
      }
    } else {
      e[i] = a[i][l];
    }
    d[i] = h;
  }
  for (int i = 0; i < n; ++i) d[i] = a[i][i];

  // Shift so that off_diagonal[i] couples i and i + 1.
  for (int i = 1; i < n; ++i) e[i - 1] = e[i];
  e[n - 1] = 0.0;
  return {std::move(d), std::move(e)};
}

}  // namespace

absl::StatusOr<std::vector<double>> SymmetricEigenvalues(const SquareMatrix& a,
                                                         double tol,
                                                         int max_iterations) {
  if (!(tol > 0.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("eigen tolerance must be positive, got ", tol));
  }
  const int n = a.size();
  if (n == 0) return std::vector<double>{};
  Tridiagonal t = Tridiagonalize(a);
  std::vector<double>& d = t.diagonal;
  std::vector<double>& e = t.off_diagonal;
  const double eps = std::numeric_limits<double>::epsilon();
  const double absolute_floor = 1e-3 * tol;

  int iterations = 0;
  for (int l = 0; l < n; ++l) {
    while (true) {
      int m = l;
      for (; m < n - 1; ++m) {
        const double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
        if (std::fabs(e[m]) <= eps * dd || std::fabs(e[m]) <= absolute_floor) {
          break;
        }
      }
      if (m == l) break;
      if (++iterations > max_iterations) {
        double residual = 0.0;
        for (int k = 0; k + 1 < n; ++k) residual = std::max(residual, std::fabs(e[k]));
        return absl::InternalError(absl::StrFormat(
            "symmetric QL did not converge after %d iterations; largest "
            "off-diagonal residual %.3g",
            max_iterations, residual));
      }
      // Wilkinson shift from the leading 2x2 block.
      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0;
      double c = 1.0;
      double p = 0.0;
      int i = m - 1;
      bool underflow = false;
      for (; i >= l; --i) {
        double f = s * e[i];
        const double b = c * e[i];
        r = std::hypot(f, g);
        e[i + 1] = r;
        if (r == 0.0) {
          d[i + 1] -= p;
          e[m] = 0.0;
          underflow = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
      }
      if (underflow) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    }
  }
  std::sort(d.begin(), d.end());
  return d;
}

absl::StatusOr<SpectralSummary> Spectrum(const Graph& g, double tol) {
  const int n = g.num_nodes();
  if (n < 2) {
    return absl::InvalidArgumentError("spectrum needs at least two nodes");
  }
  absl::StatusOr<std::vector<double>> eigenvalues =
      SymmetricEigenvalues(Laplacian(g), tol);
  if (!eigenvalues.ok()) return eigenvalues.status();
  SpectralSummary summary;
  summary.eigenvalues = *std::move(eigenvalues);
  // The Laplacian spectrum lies in [0, n]; clamp away rounding excursions.
  for (double& v : summary.eigenvalues) v = std::clamp(v, 0.0, double(n));
  summary.lambda2 = summary.eigenvalues[1];
  summary.lambda_n = summary.eigenvalues.back();
  return summary;
}

absl::StatusOr<double> AlgebraicConnectivity(const Graph& g) {
  absl::StatusOr<SpectralSummary> summary = Spectrum(g);
  if (!summary.ok()) return summary.status();
  return summary->lambda2;
}

}  // namespace privconn
