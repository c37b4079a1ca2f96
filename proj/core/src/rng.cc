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
#include "knorm/rng.h"

#include <cmath>
#include <random>

namespace knorm {

uint64_t SplitMix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

RngStream::RngStream(uint64_t seed) {
  uint64_t x = seed;
  for (uint64_t& word : state_) {
    x += 0x9e3779b97f4a7c15ULL;
    word = SplitMix64(x);
  }
}

RngStream RngStream::Substream(uint64_t seed,
                               std::initializer_list<uint64_t> path) {
  uint64_t key = seed;
  uint64_t depth = 0;
  for (uint64_t c : path) {
    ++depth;
    key = SplitMix64(key ^ SplitMix64(c + depth));
  }
  return RngStream(key);
}

double RngStream::UniformOpen() {
  // (m + 0.5) / 2^53 for m in [0, 2^53) never hits 0 or 1.
  return (static_cast<double>((*this)() >> 11) + 0.5) * 0x1.0p-53;
}

uint64_t RngStream::UniformInt(uint64_t n) {
  uint128 m = static_cast<uint128>((*this)()) * n;
  uint64_t low = static_cast<uint64_t>(m);
  if (low < n) {
    const uint64_t threshold = (0 - n) % n;
    while (low < threshold) {
      m = static_cast<uint128>((*this)()) * n;
      low = static_cast<uint64_t>(m);
    }
  }
  return static_cast<uint64_t>(m >> 64);
}

double RngStream::Normal() {
  std::normal_distribution<double> normal;
  return normal(*this);
}

double RngStream::Exponential() { return -std::log(UniformOpen()); }

double RngStream::Gamma(double shape) {
  std::gamma_distribution<double> gamma(shape, 1.0);
  return gamma(*this);
}

double RngStream::Beta(double a, double b) {
  const double x = Gamma(a);
  const double y = Gamma(b);
  return x / (x + y);
}

}  // namespace knorm
