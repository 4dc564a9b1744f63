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

#include "vdlv/dataset.hpp"

namespace {

void BM_MakeRecord(benchmark::State& state) {
  vdlv::DatasetSpec spec;
  spec.master_seed = 13;
  const auto& table = vdlv::PresetTable::builtin();
  const auto c = static_cast<std::size_t>(state.range(0));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(vdlv::make_record(spec, table, c, i++));
  state.SetLabel(vdlv::records_filename(spec.classes[c]));
}
BENCHMARK(BM_MakeRecord)->DenseRange(0, 8);

void BM_EncodeRecord(benchmark::State& state) {
  vdlv::DatasetSpec spec;
  const auto rec = vdlv::make_record(spec, vdlv::PresetTable::builtin(), 0, 0);
  for (auto _ : state) benchmark::DoNotOptimize(vdlv::encode_record(rec));
}
BENCHMARK(BM_EncodeRecord);

}  // namespace
