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

#ifndef VDLV_DATASET_HPP_
#define VDLV_DATASET_HPP_

// Bulk generation of labeled waveform datasets.
//
// Directory layout:
//
//   <dir>/manifest.json             spec echo, per-file counts and SHA-256
//   <dir>/<kind>_<label>.ndjson     one record per line (see record_io.hpp)
//
// Record i of class c is drawn from a generator seeded with
// record_seed(master_seed, c, i), so the bytes on disk depend only on the
// spec and the preset table, never on the number of workers.

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "vdlv/grid.hpp"
#include "vdlv/presets.hpp"
#include "vdlv/record_io.hpp"

namespace vdlv {

inline constexpr int kManifestSchemaVersion = 1;

// Pressure: normal, auto/double trigger, flow limited, delayed/early cycling.
// Volume: normal, double trigger, auto trigger.
std::vector<ClassKey> default_classes();

struct DatasetSpec {
  std::vector<ClassKey> classes = default_classes();
  std::size_t count_per_class = 1000;
  SamplingGrid grid;
  std::uint64_t master_seed = 0;

  // Throws Error(kValidation) for an empty or duplicated class list or a zero
  // count, Error(kInvalidParameter) for a bad grid and Error(kUnsupportedClass)
  // when a class has no preset.
  void validate(const PresetTable& table) const;
};

// splitmix64 finalizer chain: mix(mix(mix(master) ^ class_index) ^ record_index).
std::uint64_t record_seed(std::uint64_t master_seed, std::uint64_t class_index,
                          std::uint64_t record_index);

std::string record_id(const ClassKey& cls, std::size_t index);
std::string records_filename(const ClassKey& cls);

Record make_record(const DatasetSpec& spec, const PresetTable& table, std::size_t class_index,
                   std::size_t record_index);

struct ManifestFile {
  ClassKey cls;
  std::string path;  // relative to the dataset directory
  std::size_t count = 0;
  std::string sha256;
};

struct Manifest {
  int schema_version = kManifestSchemaVersion;
  DatasetSpec spec;
  std::string presets_sha256;
  std::vector<ManifestFile> files;
  std::string digest;  // SHA-256 over "<path>:<sha256>\n" of every file in order

  std::size_t total_records() const;
};

std::string manifest_digest(const std::vector<ManifestFile>& files);

Manifest read_manifest(const std::filesystem::path& dir);

// workers == 0 uses the hardware concurrency.
Manifest generate_dataset(const DatasetSpec& spec, const std::filesystem::path& dir,
                          const PresetTable& table = PresetTable::builtin(),
                          std::size_t workers = 1);

struct Dataset {
  Manifest manifest;
  std::vector<Record> records;
};

// Verifies every file digest and count against the manifest.
Dataset load_dataset(const std::filesystem::path& dir);

// A dataset directory goes through load_dataset; a plain .ndjson file is read
// as-is.
std::vector<Record> load_records(const std::filesystem::path& path);

struct ValidateOptions {
  // Records re-evaluated per file, evenly spaced; 0 checks every record.
  std::size_t sample_per_file = 25;
  double tolerance = 1e-9;
};

struct ValidationReport {
  std::size_t records = 0;            // records that passed the schema check
  std::size_t reevaluated = 0;        // records regenerated from stored params
  std::size_t value_mismatches = 0;   // regenerated values differ from stored ones
  std::size_t resampled = 0;          // records re-drawn from their stored seed
  std::size_t param_mismatches = 0;   // re-drawn params differ from stored ones
  bool has_manifest = false;
  bool presets_match = true;          // manifest preset digest equals the table's
  std::vector<std::string> problems;  // first few mismatch descriptions

  bool ok() const { return value_mismatches == 0 && param_mismatches == 0 && presets_match; }
};

// Schema/digest failures throw; model or preset drift is reported.
ValidationReport validate_dataset(const std::filesystem::path& path,
                                  const PresetTable& table = PresetTable::builtin(),
                                  const ValidateOptions& options = {});

}  // namespace vdlv

#endif  // VDLV_DATASET_HPP_
