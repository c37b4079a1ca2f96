//
// Copyright 2026 The knorm Authors.
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

#ifndef KNORM_RNG_H_
#define KNORM_RNG_H_

#include <cstdint>
#include <initializer_list>
#include <limits>

namespace knorm {

using uint128 = unsigned __int128;

// Deterministic pseudo-random stream (xoshiro256** seeded through splitmix64).
// Satisfies UniformRandomBitGenerator. Every sampler in the library takes an
// explicit RngStream; there is no global generator.
//
// Substreams are derived from a root seed and a path of 64-bit counters:
//   key_0 = seed, key_{i+1} = splitmix64(key_i ^ splitmix64(c_i + i + 1)),
// and the final key seeds the generator state. Two distinct paths give
// unrelated streams, so bench rows and trials can be replayed independently.
class RngStream {
 public:
  using result_type = uint64_t;

  explicit RngStream(uint64_t seed);

  static RngStream Substream(uint64_t seed,
                             std::initializer_list<uint64_t> path);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() {
    const uint64_t result = Rotl(state_[1] * 5, 7) * 9;
    const uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = Rotl(state_[3], 45);
    return result;
  }

  // Uniform on [0, 1) with 53 random bits.
  double Uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  // Uniform on the open interval (0, 1).
  double UniformOpen();

  // Uniform on [lo, hi).
  double Uniform(double lo, double hi) { return lo + (hi - lo) * Uniform(); }

  // Uniform integer in [0, n). Requires n > 0. Unbiased (Lemire's method).
  uint64_t UniformInt(uint64_t n);

  // Uniform 128-bit word.
  uint128 Uniform128() {
    const uint128 hi = (*this)();
    return (hi << 64) | (*this)();
  }

  // Fair coin.
  bool Bernoulli() { return ((*this)() >> 63) != 0; }

  // Random sign in {-1, +1}.
  double Sign() { return Bernoulli() ? 1.0 : -1.0; }

  double Normal();
  double Exponential();
  // Gamma(shape, scale 1). Requires shape > 0.
  double Gamma(double shape);
  // Beta(a, b) as G_a / (G_a + G_b).
  double Beta(double a, double b);

 private:
  static uint64_t Rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

  uint64_t state_[4];
};

uint64_t SplitMix64(uint64_t x);

}  // namespace knorm

#endif  // KNORM_RNG_H_
