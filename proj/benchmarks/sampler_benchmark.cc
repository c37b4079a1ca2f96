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

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <utility>

#include "benchmark/benchmark.h"
#include "knorm/count_sampler.h"
#include "knorm/exactcomb.h"
#include "knorm/mechanisms.h"
#include "knorm/rng.h"
#include "knorm/sum_sampler.h"
#include "knorm/vote_sampler.h"

namespace knorm {
namespace {

template <typename T>
T ValueOrDie(absl::StatusOr<T> value) {
  if (!value.ok()) {
    std::cerr << value.status() << "\n";
    std::abort();
  }
  return *std::move(value);
}

void BM_EulerianTableBuild(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ValueOrDie(EulerianTable::Build(d)));
  }
}
BENCHMARK(BM_EulerianTableBuild)->RangeMultiplier(2)->Range(16, 256);

// k = d / 2 keeps the ball away from the cube and cross-polytope shortcuts.
void BM_SumSample(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const SumSampler sampler = ValueOrDie(SumSampler::Create(d, d / 2));
  RngStream rng(1);
  for (auto _ : state) benchmark::DoNotOptimize(sampler.Sample(rng));
}
BENCHMARK(BM_SumSample)->RangeMultiplier(2)->Range(16, 256);

void BM_CountSample(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const CountSampler sampler = ValueOrDie(CountSampler::Create(d, d / 2));
  RngStream rng(1);
  for (auto _ : state) benchmark::DoNotOptimize(sampler.Sample(rng));
}
BENCHMARK(BM_CountSample)->RangeMultiplier(2)->Range(16, 256);

void BM_VoteSample(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const VoteSampler sampler = ValueOrDie(VoteSampler::Create(d));
  RngStream rng(1);
  for (auto _ : state) benchmark::DoNotOptimize(sampler.Sample(rng));
}
BENCHMARK(BM_VoteSample)->RangeMultiplier(2)->Range(16, 256);

void BM_EllipticNoise(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const EllipseSpec ellipse = ValueOrDie(VoteMinEllipse(d));
  const CdpConfig config{1.0, ellipse, Point(d, 0.0)};
  RngStream rng(1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ValueOrDie(EllipticGaussianNoise(config, rng)));
  }
}
BENCHMARK(BM_EllipticNoise)->RangeMultiplier(4)->Range(16, 4096);

void BM_ParallelEllipticNoise(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const EllipseSpec ellipse = ValueOrDie(VoteMinEllipse(d));
  const CdpConfig config{1.0, ellipse, Point(d, 0.0)};
  uint64_t draw = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        ValueOrDie(ParallelEllipticNoise(config, 4, 1, draw++)));
  }
}
BENCHMARK(BM_ParallelEllipticNoise)->RangeMultiplier(4)->Range(1024, 65536);

}  // namespace
}  // namespace knorm

BENCHMARK_MAIN();
