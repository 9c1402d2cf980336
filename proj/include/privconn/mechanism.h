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

#ifndef PRIVCONN_MECHANISM_H_
#define PRIVCONN_MECHANISM_H_

#include <cstdint>

#include "absl/status/statusor.h"
#include "privconn/graph.h"
#include "privconn/random.h"
#include "privconn/scale_solver.h"

namespace privconn {

// Output of one private release of the algebraic connectivity. The true
// lambda2 is never stored here.
struct PrivateRelease {
  double lambda2_tilde = 0.0;
  double scale_b = 0.0;
  // C_{lambda2}(b). Note that C is a strictly monotone function of
  // min(lambda2, n - lambda2), so it determines lambda2 up to reflection.
  double normalizer_c = 0.0;
  int num_nodes = 0;
  PrivacyParams params;
  uint64_t seed = 0;
};

// Computes lambda2 of `g`, solves the scale for (params, n) and draws
// lambda2_tilde from the bounded Laplace law on [0, n] centered at lambda2.
// Disconnected graphs are fine (lambda2 = 0 is in the support). Solver and
// eigensolver errors propagate.
absl::StatusOr<PrivateRelease> Privatize(const Graph& g,
                                         const PrivacyParams& params,
                                         RandomStream& rng);

// Same, starting from an already computed lambda2 in [0, n].
absl::StatusOr<PrivateRelease> PrivatizeValue(double lambda2, int num_nodes,
                                              const PrivacyParams& params,
                                              RandomStream& rng);

}  // namespace privconn

#endif  // PRIVCONN_MECHANISM_H_
