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

#ifndef VDLV_RECORD_IO_HPP_
#define VDLV_RECORD_IO_HPP_

// Newline-delimited JSON records, one self-contained waveform per line:
//
//   {"schema_version":1,"id":"pressure-normal-000000","kind":"pressure",
//    "label":"normal","seed":123,"grid":{"t0":0.0,"dt":0.01,"n":1201},
//    "params":{"theta":0.3,"cp":0.0,"alpha_p1":...},"values":[...]}
//
// "label", "seed" and "params" are optional (generated waveforms carry no
// params). Doubles are written in shortest round-trip form, so decoding
// reproduces the exact bit patterns.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vdlv/grid.hpp"
#include "vdlv/model.hpp"

namespace vdlv {

inline constexpr int kRecordSchemaVersion = 1;

struct Record {
  std::string id;
  SignalKind kind = SignalKind::kPressure;
  std::optional<VdType> label;
  SamplingGrid grid;
  std::optional<ModelParams> params;
  std::optional<std::uint64_t> seed;
  std::vector<double> values;

  friend bool operator==(const Record&, const Record&) = default;
};

std::string encode_record(const Record& record);

// Throws Error(kSchemaMismatch) for a foreign schema version and
// Error(kMalformedRecord) for anything else that does not parse.
Record decode_record(std::string_view line);

std::vector<Record> read_records(const std::filesystem::path& path);
void write_records(const std::filesystem::path& path, std::span<const Record> records);

Waveform to_waveform(const Record& record);

}  // namespace vdlv

#endif  // VDLV_RECORD_IO_HPP_
