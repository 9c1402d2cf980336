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

#include "privconn/mechanism.h"

#include "privconn/bounded_laplace.h"
#include "privconn/spectrum.h"

namespace privconn {

absl::StatusOr<PrivateRelease> PrivatizeValue(double lambda2, int num_nodes,
                                              const PrivacyParams& params,
                                              RandomStream& rng) {
  const double n = num_nodes;
  absl::StatusOr<double> b = SolveScale(params, n);
  if (!b.ok()) return b.status();
  absl::StatusOr<BoundedLaplace> dist = BoundedLaplace::Create(lambda2, *b, n);
  if (!dist.ok()) return dist.status();
  PrivateRelease release;
  release.lambda2_tilde = dist->Sample(rng);
  release.scale_b = *b;
  release.normalizer_c = dist->normalizer();
  release.num_nodes = num_nodes;
  release.params = params;
  release.seed = rng.seed();
  return release;
}

absl::StatusOr<PrivateRelease> Privatize(const Graph& g,
                                         const PrivacyParams& params,
                                         RandomStream& rng) {
  if (absl::Status s = params.Validate(); !s.ok()) return s;
  absl::StatusOr<double> lambda2 = AlgebraicConnectivity(g);
  if (!lambda2.ok()) return lambda2.status();
  return PrivatizeValue(*lambda2, g.num_nodes(), params, rng);
}

}  // namespace privconn
