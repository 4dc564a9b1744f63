// Copyright 2026 The VDLV Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "vdlv/metrics.hpp"

namespace {

std::vector<double> noise(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> d;
  std::vector<double> v(n);
  for (double& x : v) x = d(rng);
  return v;
}

void BM_Dtw(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = noise(n, 1), b = noise(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(vdlv::dtw(a, b));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Dtw)->Arg(300)->Arg(600)->Arg(1201)->Complexity(benchmark::oNSquared);

void BM_Periodogram(benchmark::State& state) {
  const auto x = noise(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(vdlv::periodogram(x));
}
BENCHMARK(BM_Periodogram)->Arg(1201)->Arg(4096);

void BM_EvaluateSets(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<vdlv::Waveform> real, gen;
  for (std::size_t i = 0; i < n; ++i) {
    real.push_back({vdlv::SamplingGrid{}, noise(1201, i), vdlv::SignalKind::kPressure, vdlv::VdType::kNormal});
    gen.push_back({vdlv::SamplingGrid{}, noise(1201, 1000 + i), vdlv::SignalKind::kPressure, vdlv::VdType::kNormal});
  }
  vdlv::EvalOptions opts;
  opts.workers = 1;
  for (auto _ : state) benchmark::DoNotOptimize(vdlv::evaluate_sets(real, gen, opts));
}
BENCHMARK(BM_EvaluateSets)->Arg(4)->Arg(16)->Unit(benchmark::kMillisecond);

}  // namespace
