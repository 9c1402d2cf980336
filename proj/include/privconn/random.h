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

#ifndef PRIVCONN_RANDOM_H_
#define PRIVCONN_RANDOM_H_

#include <cstdint>
#include <random>

namespace privconn {

// Seeded 64-bit random source with deterministic substreams. The same seed
// yields the same sequence on every platform: the engine is mt19937_64 and
// the uniform conversion is done here rather than by a std distribution.
class RandomStream {
 public:
  explicit RandomStream(uint64_t seed);

  uint64_t seed() const { return seed_; }

  // Independent stream derived from (seed, index); does not advance *this.
  RandomStream Split(uint64_t index) const;

  uint64_t NextU64() { return engine_(); }
  // Uniform on the open interval (0, 1), 53-bit resolution.
  double Uniform01();
  // Uniform integer in [0, bound); bound must be positive.
  uint64_t UniformInt(uint64_t bound);

 private:
  uint64_t seed_;
  std::mt19937_64 engine_;
};

// SplitMix64 finalizer, used for seed derivation.
uint64_t MixSeed(uint64_t x);

}  // namespace privconn

#endif  // PRIVCONN_RANDOM_H_
