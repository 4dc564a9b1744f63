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

#include "vdlv/dataset.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <set>
#include <thread>

#include "json.hpp"
#include "vdlv/digest.hpp"
#include "vdlv/error.hpp"

namespace vdlv {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

constexpr std::string_view kManifestName = "manifest.json";
constexpr std::string_view kManifestFormat = "vdlv-dataset";

std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::size_t resolve_workers(std::size_t workers) {
  if (workers != 0) return workers;
  return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

ordered_json class_json(const ClassKey& cls) {
  return {{"label", to_string(cls.first)}, {"kind", to_string(cls.second)}};
}

ClassKey class_from_json(const json& j) {
  const auto label = parse_vd_type(j.at("label").get<std::string>());
  const auto kind = parse_signal_kind(j.at("kind").get<std::string>());
  if (!label || !kind) fail(ErrorCategory::kSchemaMismatch, "manifest names an unknown class");
  return {*label, *kind};
}

std::vector<std::size_t> sample_indices(std::size_t count, std::size_t sample) {
  std::vector<std::size_t> out;
  if (sample == 0 || count <= sample) {
    for (std::size_t i = 0; i < count; ++i) out.push_back(i);
    return out;
  }
  for (std::size_t k = 0; k < sample; ++k) out.push_back(k * count / sample);
  return out;
}

void check_record(const Record& r, const PresetTable& table, const ValidateOptions& options,
                  ValidationReport& report) {
  const auto note = [&report](std::string what) {
    if (report.problems.size() < 20) report.problems.push_back(std::move(what));
  };
  if (r.params) {
    ++report.reevaluated;
    const Waveform regenerated = evaluate(*r.params, r.grid);
    std::size_t worst = 0;
    double worst_diff = 0.0;
    for (std::size_t i = 0; i < r.values.size(); ++i) {
      const double diff = std::abs(regenerated.values[i] - r.values[i]);
      if (!(diff <= worst_diff)) {
        worst_diff = diff;
        worst = i;
      }
    }
    if (worst_diff > options.tolerance) {
      ++report.value_mismatches;
      note(r.id + ": regenerated value differs at sample " + std::to_string(worst) + " by " +
           std::to_string(worst_diff));
    }
  }
  if (r.params && r.seed && r.label && table.has(*r.label, r.kind)) {
    ++report.resampled;
    std::mt19937_64 rng(*r.seed);
    const SymbolValues drawn = sample_symbols(*r.label, r.kind, rng, table);
    const SymbolValues stored = to_symbols(*r.params);
    for (const auto& [name, value] : drawn) {
      if (name == "theta" || name == "cp") continue;  // table settings, not draws
      if (stored.at(name) != value) {
        ++report.param_mismatches;
        note(r.id + ": parameter " + name + " does not match the preset table draw");
        break;
      }
    }
  }
}

}  // namespace

std::vector<ClassKey> default_classes() {
  return {
      {VdType::kNormal, SignalKind::kPressure},
      {VdType::kAutoTrigger, SignalKind::kPressure},
      {VdType::kFlowLimited, SignalKind::kPressure},
      {VdType::kDoubleTrigger, SignalKind::kPressure},
      {VdType::kDelayedCycling, SignalKind::kPressure},
      {VdType::kEarlyCycling, SignalKind::kPressure},
      {VdType::kNormal, SignalKind::kVolume},
      {VdType::kDoubleTrigger, SignalKind::kVolume},
      {VdType::kAutoTrigger, SignalKind::kVolume},
  };
}

void DatasetSpec::validate(const PresetTable& table) const {
  if (classes.empty()) fail(ErrorCategory::kValidation, "dataset needs at least one class");
  if (count_per_class == 0) {
    fail(ErrorCategory::kValidation, "count per class must be at least 1");
  }
  grid.validate();
  std::set<ClassKey> seen;
  for (const ClassKey& cls : classes) {
    table.at(cls.first, cls.second);
    if (!seen.insert(cls).second) {
      fail(ErrorCategory::kValidation, "class " + records_filename(cls) + " listed twice");
    }
  }
}

std::uint64_t record_seed(std::uint64_t master_seed, std::uint64_t class_index,
                          std::uint64_t record_index) {
  return mix64(mix64(mix64(master_seed) ^ class_index) ^ record_index);
}

std::string record_id(const ClassKey& cls, std::size_t index) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%06zu", index);
  return std::string(to_string(cls.second)) + "-" + std::string(to_string(cls.first)) + "-" + buf;
}

std::string records_filename(const ClassKey& cls) {
  return std::string(to_string(cls.second)) + "_" + std::string(to_string(cls.first)) + ".ndjson";
}

Record make_record(const DatasetSpec& spec, const PresetTable& table, std::size_t class_index,
                   std::size_t record_index) {
  const ClassKey& cls = spec.classes.at(class_index);
  Record r;
  r.id = record_id(cls, record_index);
  r.kind = cls.second;
  r.label = cls.first;
  r.grid = spec.grid;
  r.seed = record_seed(spec.master_seed, class_index, record_index);
  std::mt19937_64 rng(*r.seed);
  r.params = sample_params(cls.first, cls.second, rng, table);
  r.values = evaluate(*r.params, spec.grid).values;
  return r;
}

std::size_t Manifest::total_records() const {
  std::size_t total = 0;
  for (const auto& f : files) total += f.count;
  return total;
}

std::string manifest_digest(const std::vector<ManifestFile>& files) {
  Sha256 h;
  for (const auto& f : files) {
    h.update(f.path);
    h.update(":");
    h.update(f.sha256);
    h.update("\n");
  }
  return h.hex_digest();
}

Manifest generate_dataset(const DatasetSpec& spec, const std::filesystem::path& dir,
                          const PresetTable& table, std::size_t workers) {
  spec.validate(table);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) fail(ErrorCategory::kIo, "cannot create " + dir.string() + ": " + ec.message());

  const std::size_t n_workers = std::min(resolve_workers(workers), spec.count_per_class);

  Manifest manifest;
  manifest.spec = spec;
  manifest.presets_sha256 = table.digest();

  std::vector<std::string> lines(spec.count_per_class);
  for (std::size_t c = 0; c < spec.classes.size(); ++c) {
    // Workers fill fixed slots; the writer below emits them in index order.
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    const auto work = [&] {
      for (std::size_t i = next++; i < spec.count_per_class; i = next++) {
        try {
          lines[i] = encode_record(make_record(spec, table, c, i));
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    };
    if (n_workers <= 1) {
      work();
    } else {
      std::vector<std::jthread> pool;
      for (std::size_t w = 0; w < n_workers; ++w) pool.emplace_back(work);
    }
    if (error) std::rethrow_exception(error);

    ManifestFile file{spec.classes[c], records_filename(spec.classes[c]), spec.count_per_class, {}};
    const auto path = dir / file.path;
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) fail(ErrorCategory::kIo, "cannot write " + path.string());
    Sha256 h;
    for (const std::string& line : lines) {
      out << line << '\n';
      h.update(line);
      h.update("\n");
    }
    out.close();
    if (!out) fail(ErrorCategory::kIo, "write failed for " + path.string());
    file.sha256 = h.hex_digest();
    manifest.files.push_back(std::move(file));
  }
  manifest.digest = manifest_digest(manifest.files);

  ordered_json j;
  j["format"] = kManifestFormat;
  j["schema_version"] = manifest.schema_version;
  j["record_schema_version"] = kRecordSchemaVersion;
  ordered_json classes = ordered_json::array();
  for (const auto& cls : spec.classes) classes.push_back(class_json(cls));
  j["spec"] = {{"classes", classes},
               {"count_per_class", spec.count_per_class},
               {"grid", {{"t0", spec.grid.t0}, {"dt", spec.grid.dt}, {"n", spec.grid.n}}},
               {"master_seed", spec.master_seed}};
  j["presets_sha256"] = manifest.presets_sha256;
  j["presets"] = ordered_json::parse(table.to_json().dump());
  ordered_json files = ordered_json::array();
  for (const auto& f : manifest.files) {
    ordered_json entry = class_json(f.cls);
    entry["path"] = f.path;
    entry["count"] = f.count;
    entry["sha256"] = f.sha256;
    files.push_back(std::move(entry));
  }
  j["files"] = files;
  j["total_records"] = manifest.total_records();
  j["digest"] = manifest.digest;

  const auto manifest_path = dir / kManifestName;
  std::ofstream out(manifest_path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorCategory::kIo, "cannot write " + manifest_path.string());
  out << j.dump(2) << '\n';
  if (!out) fail(ErrorCategory::kIo, "write failed for " + manifest_path.string());
  return manifest;
}

Manifest read_manifest(const std::filesystem::path& dir) {
  const auto path = dir / kManifestName;
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCategory::kIo, "cannot open " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    fail(ErrorCategory::kSchemaMismatch, path.string() + ": " + e.what());
  }
  if (j.value("format", "") != kManifestFormat) {
    fail(ErrorCategory::kSchemaMismatch, path.string() + " is not a vdlv dataset manifest");
  }
  if (j.value("schema_version", -1) != kManifestSchemaVersion) {
    fail(ErrorCategory::kSchemaMismatch,
         "manifest schema_version " + j.value("schema_version", json()).dump() + " (expected " +
             std::to_string(kManifestSchemaVersion) + ")");
  }
  Manifest m;
  try {
    const json& spec = j.at("spec");
    m.spec.classes.clear();
    for (const json& cls : spec.at("classes")) m.spec.classes.push_back(class_from_json(cls));
    m.spec.count_per_class = spec.at("count_per_class").get<std::size_t>();
    m.spec.grid = {spec.at("grid").at("t0").get<double>(), spec.at("grid").at("dt").get<double>(),
                   spec.at("grid").at("n").get<std::size_t>()};
    m.spec.master_seed = spec.at("master_seed").get<std::uint64_t>();
    m.presets_sha256 = j.at("presets_sha256").get<std::string>();
    for (const json& f : j.at("files")) {
      m.files.push_back({class_from_json(f), f.at("path").get<std::string>(),
                         f.at("count").get<std::size_t>(), f.at("sha256").get<std::string>()});
    }
    m.digest = j.at("digest").get<std::string>();
  } catch (const json::exception& e) {
    fail(ErrorCategory::kSchemaMismatch, path.string() + ": " + e.what());
  }
  if (manifest_digest(m.files) != m.digest) {
    fail(ErrorCategory::kDigestMismatch, "manifest digest does not match its file list");
  }
  return m;
}

Dataset load_dataset(const std::filesystem::path& dir) {
  Dataset ds{read_manifest(dir), {}};
  for (const ManifestFile& f : ds.manifest.files) {
    const auto path = dir / f.path;
    const std::string actual = sha256_file(path);
    if (actual != f.sha256) {
      fail(ErrorCategory::kDigestMismatch,
           f.path + ": sha256 " + actual + " does not match manifest " + f.sha256);
    }
    auto records = read_records(path);
    if (records.size() != f.count) {
      fail(ErrorCategory::kValidation, f.path + ": " + std::to_string(records.size()) +
                                           " records, manifest says " + std::to_string(f.count));
    }
    for (Record& r : records) {
      if (r.kind != f.cls.second || r.label != f.cls.first) {
        fail(ErrorCategory::kMalformedRecord, f.path + ": record " + r.id + " has the wrong class");
      }
      ds.records.push_back(std::move(r));
    }
  }
  return ds;
}

std::vector<Record> load_records(const std::filesystem::path& path) {
  if (std::filesystem::is_directory(path)) return load_dataset(path).records;
  return read_records(path);
}

ValidationReport validate_dataset(const std::filesystem::path& path, const PresetTable& table,
                                  const ValidateOptions& options) {
  ValidationReport report;
  if (!std::filesystem::is_directory(path)) {
    const auto records = read_records(path);
    report.records = records.size();
    for (std::size_t i : sample_indices(records.size(), options.sample_per_file)) {
      check_record(records[i], table, options, report);
    }
    return report;
  }

  const Dataset ds = load_dataset(path);
  report.has_manifest = true;
  report.records = ds.records.size();
  if (ds.manifest.presets_sha256 != table.digest()) {
    report.presets_match = false;
    report.problems.push_back("dataset was generated under a different preset table");
  }
  std::size_t offset = 0;
  for (const ManifestFile& f : ds.manifest.files) {
    for (std::size_t i : sample_indices(f.count, options.sample_per_file)) {
      check_record(ds.records[offset + i], table, options, report);
    }
    offset += f.count;
  }
  return report;
}

}  // namespace vdlv
