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

#include "vdlv/record_io.hpp"

#include <cmath>
#include <fstream>

#include "json.hpp"
#include "vdlv/error.hpp"
#include "vdlv/symbols.hpp"

namespace vdlv {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void malformed(const std::string& what) {
  fail(ErrorCategory::kMalformedRecord, what);
}

}  // namespace

std::string encode_record(const Record& record) {
  ordered_json j;
  j["schema_version"] = kRecordSchemaVersion;
  j["id"] = record.id;
  j["kind"] = to_string(record.kind);
  if (record.label) j["label"] = to_string(*record.label);
  if (record.seed) j["seed"] = *record.seed;
  j["grid"] = {{"t0", record.grid.t0}, {"dt", record.grid.dt}, {"n", record.grid.n}};
  if (record.params) {
    const SymbolValues symbols = to_symbols(*record.params);
    ordered_json params = ordered_json::object();
    for (std::string_view name : symbols_for(kind_of(*record.params))) {
      params[std::string(name)] = symbols.find(name)->second;
    }
    j["params"] = std::move(params);
  }
  j["values"] = record.values;
  return j.dump();
}

Record decode_record(std::string_view line) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::parse_error& e) {
    malformed(std::string("record is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) malformed("record must be a JSON object");
  if (!j.contains("schema_version") || !j["schema_version"].is_number_integer()) {
    malformed("record lacks an integer schema_version");
  }
  if (j["schema_version"].get<int>() != kRecordSchemaVersion) {
    fail(ErrorCategory::kSchemaMismatch,
         "record schema_version " + j["schema_version"].dump() + " (expected " +
             std::to_string(kRecordSchemaVersion) + ")");
  }

  Record r;
  try {
    r.id = j.at("id").get<std::string>();
    if (r.id.empty()) malformed("record id is empty");

    const auto kind = parse_signal_kind(j.at("kind").get<std::string>());
    if (!kind) malformed("record " + r.id + ": unknown kind " + j.at("kind").dump());
    r.kind = *kind;

    if (j.contains("label") && !j["label"].is_null()) {
      const auto label = parse_vd_type(j["label"].get<std::string>());
      if (!label) malformed("record " + r.id + ": unknown label " + j["label"].dump());
      r.label = *label;
    }
    if (j.contains("seed") && !j["seed"].is_null()) {
      if (!j["seed"].is_number_unsigned()) malformed("record " + r.id + ": seed must be unsigned");
      r.seed = j["seed"].get<std::uint64_t>();
    }

    const json& grid = j.at("grid");
    if (!grid.at("n").is_number_unsigned()) malformed("record " + r.id + ": grid.n must be unsigned");
    r.grid = {grid.at("t0").get<double>(), grid.at("dt").get<double>(),
              grid.at("n").get<std::size_t>()};

    const json& values = j.at("values");
    if (!values.is_array()) malformed("record " + r.id + ": values must be an array");
    r.values.reserve(values.size());
    for (const json& v : values) {
      if (!v.is_number()) malformed("record " + r.id + ": non-numeric value");
      r.values.push_back(v.get<double>());
    }

    if (j.contains("params") && !j["params"].is_null()) {
      SymbolValues symbols;
      for (const auto& [name, value] : j["params"].items()) symbols[name] = value.get<double>();
      r.params = params_from_symbols(r.kind, symbols);
    }
  } catch (const json::exception& e) {
    malformed("record " + r.id + ": " + e.what());
  } catch (const Error& e) {
    if (e.category() == ErrorCategory::kMalformedRecord) throw;
    malformed("record " + r.id + ": " + e.what());
  }

  try {
    r.grid.validate();
  } catch (const Error& e) {
    malformed("record " + r.id + ": " + e.what());
  }
  if (r.values.size() != r.grid.n) {
    malformed("record " + r.id + ": " + std::to_string(r.values.size()) +
              " values for a grid of " + std::to_string(r.grid.n));
  }
  for (double v : r.values) {
    if (!std::isfinite(v)) malformed("record " + r.id + ": non-finite value");
  }
  return r;
}

std::vector<Record> read_records(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCategory::kIo, "cannot open " + path.string());
  std::vector<Record> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      out.push_back(decode_record(line));
    } catch (const Error& e) {
      throw Error(e.category(),
                  path.filename().string() + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

void write_records(const std::filesystem::path& path, std::span<const Record> records) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorCategory::kIo, "cannot write " + path.string());
  for (const Record& r : records) out << encode_record(r) << '\n';
  if (!out) fail(ErrorCategory::kIo, "write failed for " + path.string());
}

Waveform to_waveform(const Record& record) {
  return {record.grid, record.values, record.kind, record.label};
}

}  // namespace vdlv
