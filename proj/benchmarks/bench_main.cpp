// Copyright 2026 The conexp Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <random>

#include "conexp/certify.hpp"
#include "conexp/extremal.hpp"
#include "conexp/qubit.hpp"
#include "conexp/sphere_max.hpp"

namespace {

using namespace conexp;

AffineBallMap random_map(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Mat a(n, n);
  Vec b(n);
  for (Eigen::Index i = 0; i < a.size(); ++i) a(i) = g(rng);
  for (int i = 0; i < n; ++i) b(i) = g(rng);
  return {a, b};
}

void BM_SphereMax(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const AffineBallMap phi = random_map(static_cast<int>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(sphere_max(phi, {}).value);
}
BENCHMARK(BM_SphereMax)->DenseRange(2, 8, 2)->Arg(16)->Arg(32);

void BM_SphereMaxHardCase(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const AffineBallMap phi(Mat::Identity(n, n) * 0.5, Vec::Zero(n));
  for (auto _ : state) benchmark::DoNotOptimize(sphere_max(phi, {}).value);
}
BENCHMARK(BM_SphereMaxHardCase)->Arg(4)->Arg(16);

void BM_Synthesize(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(synthesize(n).certificate.index);
}
BENCHMARK(BM_Synthesize)->DenseRange(2, 8, 2);

void BM_PrimitivityIndexExtremal(benchmark::State& state) {
  const ExtremalWitness w = synthesize(static_cast<int>(state.range(0)));
  const CertifyOptions opts{{}, {w.contact_witness()}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(primitivity_index(w.map, {}, opts).index);
  }
}
BENCHMARK(BM_PrimitivityIndexExtremal)->DenseRange(2, 8, 1);

void BM_ChannelIndex(benchmark::State& state) {
  const KrausChannel ch = wielandt_channel(0.5235987755982988, 1.0471975511965976);
  for (auto _ : state) benchmark::DoNotOptimize(channel_index(ch).index);
}
BENCHMARK(BM_ChannelIndex);

}  // namespace

BENCHMARK_MAIN();
