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

#include "vdlv/model.hpp"
#include "vdlv/presets.hpp"

namespace {

void BM_PressureNominal(benchmark::State& state) {
  const auto params = vdlv::nominal_params(static_cast<vdlv::VdType>(state.range(0)),
                                           vdlv::SignalKind::kPressure);
  const vdlv::SamplingGrid grid;
  for (auto _ : state) {
    benchmark::DoNotOptimize(vdlv::evaluate(params, grid));
  }
  state.SetLabel(std::string(to_string(static_cast<vdlv::VdType>(state.range(0)))));
}
BENCHMARK(BM_PressureNominal)->DenseRange(0, 6);

void BM_RectPulse(benchmark::State& state) {
  const vdlv::SamplingGrid grid{0.0, 0.01, static_cast<std::size_t>(state.range(0))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(vdlv::rect_pulse({50.0, 0.63, -0.4}, 0.3, grid));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_RectPulse)->Arg(1201)->Arg(12001);

void BM_SampleAndEvaluate(benchmark::State& state) {
  std::mt19937_64 rng(7);
  const vdlv::SamplingGrid grid;
  for (auto _ : state) {
    const auto p = vdlv::sample_params(vdlv::VdType::kDoubleTrigger, vdlv::SignalKind::kVolume, rng);
    benchmark::DoNotOptimize(vdlv::evaluate(p, grid));
  }
}
BENCHMARK(BM_SampleAndEvaluate);

}  // namespace
