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

#include "vdlv/presets.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <initializer_list>

#include "vdlv/digest.hpp"
#include "vdlv/error.hpp"

namespace vdlv {
namespace {

using nlohmann::json;

constexpr std::string_view kFormat = "vdlv-presets";
constexpr int kVersion = 1;

ParamRange span_of(double lo, double hi) { return {lo, hi, {}}; }
ParamRange fixed_at(double value) { return {value, value, {}}; }
ParamRange times(std::string of, double lo, double hi) { return {lo, hi, std::move(of)}; }

ClassPreset with(ClassPreset base,
                 std::initializer_list<std::pair<const char*, ParamRange>> ranges,
                 std::initializer_list<std::pair<const char*, double>> nominal) {
  for (const auto& [name, range] : ranges) base.ranges[name] = range;
  for (const auto& [name, value] : nominal) base.nominal[name] = value;
  return base;
}

PresetTable make_builtin() {
  PresetTable t;

  // Pressure. phi_p1 is fixed per class; A_p2/A_p3 of unused components are 0.
  const ClassPreset normal_p = with({},
      {{"alpha_p1", span_of(20, 60)}, {"beta_p1", span_of(0.6, 0.75)},
       {"phi_p1", fixed_at(-0.4)}, {"gamma_p1", span_of(15, 40)},
       {"gamma_p2", span_of(10, 20)}, {"A_p1", span_of(15, 24)},
       {"A_p2", fixed_at(0)}, {"A_p3", fixed_at(0)}},
      {{"alpha_p1", 50}, {"beta_p1", 0.63}, {"phi_p1", -0.4}, {"gamma_p1", 36.2},
       {"gamma_p2", 18.17}, {"A_p1", 22.7}});
  t.set(VdType::kNormal, SignalKind::kPressure, normal_p);

  // The missed breath: the normal row with the breath amplitude removed.
  t.set(VdType::kIneffectiveTrigger, SignalKind::kPressure,
        with(normal_p, {{"A_p1", fixed_at(0)}}, {{"A_p1", 0}}));

  t.set(VdType::kAutoTrigger, SignalKind::kPressure, with({},
      {{"alpha_p1", span_of(20, 60)}, {"beta_p1", span_of(0.63, 0.85)},
       {"phi_p1", fixed_at(-0.9)}, {"gamma_p1", span_of(10, 40)},
       {"gamma_p2", span_of(15, 40)}, {"A_p1", span_of(15, 24)}, {"A_p2", fixed_at(0)},
       {"alpha_p3", span_of(2, 20)}, {"beta_p3", span_of(0.6, 0.95)},
       {"phi_p3", span_of(2.2, 2.8)}, {"A_p3", times("A_p1", 1.0, 1.2)}},
      {{"alpha_p1", 50}, {"beta_p1", 0.63}, {"phi_p1", -0.9}, {"gamma_p1", 36.2},
       {"gamma_p2", 18.17}, {"A_p1", 22.7}, {"alpha_p3", 12.2}, {"beta_p3", 0.63},
       {"phi_p3", 2.8}, {"A_p3", 22.7}}));

  t.set(VdType::kFlowLimited, SignalKind::kPressure, with({},
      {{"alpha_p1", span_of(20, 60)}, {"beta_p1", span_of(0.5, 0.65)},
       {"phi_p1", fixed_at(-0.4)}, {"gamma_p1", span_of(15, 100)},
       {"gamma_p2", span_of(10, 20)}, {"A_p1", span_of(10, 22)}, {"A_p2", fixed_at(0)},
       {"alpha_p3", span_of(2, 20)}, {"beta_p3", span_of(0.97, 0.99)},
       {"phi_p3", span_of(0.25, 0.35)}, {"A_p3", times("A_p1", 0.5, 1.0)}},
      {{"alpha_p1", 50}, {"beta_p1", 0.63}, {"phi_p1", -0.4}, {"gamma_p1", 36.2},
       {"gamma_p2", 18.17}, {"A_p1", 20}, {"alpha_p3", 13.84}, {"beta_p3", 0.97},
       {"phi_p3", 0.29}, {"A_p3", 2.6}}));

  t.set(VdType::kDoubleTrigger, SignalKind::kPressure, with({},
      {{"alpha_p1", span_of(20, 60)}, {"beta_p1", span_of(0.6, 0.85)},
       {"phi_p1", fixed_at(-0.4)}, {"gamma_p1", span_of(20, 100)},
       {"gamma_p2", span_of(10, 40)}, {"A_p1", span_of(15, 24)}, {"A_p2", fixed_at(0)},
       {"alpha_p3", span_of(2, 20)}, {"beta_p3", span_of(0.7, 0.95)},
       {"phi_p3", span_of(1.1, 1.6)}, {"A_p3", times("A_p1", 1.0, 1.2)}},
      {{"alpha_p1", 50}, {"beta_p1", 0.63}, {"phi_p1", -0.4}, {"gamma_p1", 36.2},
       {"gamma_p2", 18.17}, {"A_p1", 22.7}, {"alpha_p3", 10.9}, {"beta_p3", 0.73},
       {"phi_p3", 1.52}, {"A_p3", 23}}));

  t.set(VdType::kDelayedCycling, SignalKind::kPressure, with({},
      {{"alpha_p1", span_of(20, 100)}, {"beta_p1", span_of(0.5, 0.65)},
       {"phi_p1", fixed_at(-0.4)}, {"gamma_p1", span_of(10, 100)},
       {"gamma_p2", span_of(5, 30)}, {"A_p1", span_of(10, 24)}, {"A_p2", fixed_at(0)},
       {"alpha_p3", span_of(30, 100)}, {"beta_p3", span_of(0.98, 0.99)},
       {"phi_p3", span_of(0.4, 0.65)}, {"A_p3", times("A_p1", 0.1, 0.2)}},
      {{"alpha_p1", 50}, {"beta_p1", 0.63}, {"phi_p1", -0.4}, {"gamma_p1", 36.2},
       {"gamma_p2", 18.17}, {"A_p1", 22.7}, {"alpha_p3", 76.97}, {"beta_p3", 0.99},
       {"phi_p3", 0.60}, {"A_p3", 3}}));

  // A_p2 is an absolute range here; the 1.3 figure value lies outside it.
  t.set(VdType::kEarlyCycling, SignalKind::kPressure, with({},
      {{"alpha_p1", span_of(20, 100)}, {"beta_p1", span_of(0.5, 0.65)},
       {"phi_p1", fixed_at(-0.4)}, {"gamma_p1", span_of(10, 100)},
       {"gamma_p2", span_of(5, 30)}, {"A_p1", span_of(10, 24)},
       {"alpha_p2", span_of(5, 20)}, {"beta_p2", span_of(0.92, 0.96)},
       {"phi_p2", span_of(-0.4, 0.0)}, {"A_p2", span_of(0.5, 1.2)},
       {"alpha_p3", span_of(2, 10)}, {"beta_p3", span_of(0.92, 0.96)},
       {"phi_p3", span_of(1.6, 1.8)}, {"A_p3", span_of(1, 3)}},
      {{"alpha_p1", 50}, {"beta_p1", 0.63}, {"phi_p1", -0.4}, {"gamma_p1", 36.2},
       {"gamma_p2", 18.17}, {"A_p1", 22.7}, {"alpha_p2", 8.2}, {"beta_p2", 0.93},
       {"phi_p2", -0.4}, {"A_p2", 1.3}, {"alpha_p3", 9.28}, {"beta_p3", 0.92},
       {"phi_p3", 1.6}, {"A_p3", 2.2}}));

  // Volume. Flow-limited, delayed and early cycling volume traces are
  // indistinguishable from normal ones and have no preset.
  const ClassPreset normal_v = with({},
      {{"alpha_v1", span_of(50, 100)}, {"beta_v1", span_of(0.6, 0.75)},
       {"gamma_v1", span_of(60, 200)}, {"gamma_v2", span_of(40, 100)},
       {"phi_v1", fixed_at(-0.4)}, {"A_v1", span_of(200, 650)}, {"A_v2", fixed_at(0)}},
      {{"alpha_v1", 96}, {"beta_v1", 0.62}, {"gamma_v1", 150}, {"gamma_v2", 78},
       {"phi_v1", -0.4}, {"A_v1", 500}});
  t.set(VdType::kNormal, SignalKind::kVolume, normal_v);

  t.set(VdType::kIneffectiveTrigger, SignalKind::kVolume, with(normal_v,
      {{"A_v1", fixed_at(30)}, {"alpha_v1", fixed_at(50)}, {"gamma_v1", fixed_at(100)},
       {"gamma_v2", fixed_at(200)}},
      {{"A_v1", 30}, {"alpha_v1", 50}, {"gamma_v1", 100}, {"gamma_v2", 200}}));

  t.set(VdType::kDoubleTrigger, SignalKind::kVolume, with({},
      {{"alpha_v1", span_of(10, 100)}, {"beta_v1", span_of(0.7, 0.9)},
       {"gamma_v1", span_of(60, 200)}, {"gamma_v2", span_of(60, 100)},
       {"phi_v1", fixed_at(-0.4)}, {"A_v1", span_of(200, 650)},
       {"alpha_v2", span_of(15, 20)}, {"phi_v2", span_of(1.2, 1.7)},
       {"beta_v2", span_of(0.8, 0.95)}, {"A_v2", times("A_v1", 1.0, 1.2)}},
      {{"alpha_v1", 96}, {"beta_v1", 0.62}, {"gamma_v1", 150}, {"gamma_v2", 78},
       {"phi_v1", -0.4}, {"A_v1", 500}, {"alpha_v2", 14.43}, {"phi_v2", 1.65},
       {"beta_v2", 0.90}, {"A_v2", 500}}));

  t.set(VdType::kAutoTrigger, SignalKind::kVolume, with({},
      {{"alpha_v1", span_of(10, 100)}, {"beta_v1", span_of(0.7, 0.9)},
       {"gamma_v1", span_of(60, 200)}, {"gamma_v2", span_of(60, 100)},
       {"phi_v1", fixed_at(-0.9)}, {"A_v1", span_of(200, 650)},
       {"alpha_v2", span_of(3, 10)}, {"phi_v2", span_of(2.2, 2.7)},
       {"beta_v2", span_of(0.8, 0.95)}, {"A_v2", times("A_v1", 1.0, 1.0)}},
      {{"alpha_v1", 96}, {"beta_v1", 0.62}, {"gamma_v1", 150}, {"gamma_v2", 78},
       {"phi_v1", -0.9}, {"A_v1", 500}, {"alpha_v2", 5}, {"phi_v2", 2.75},
       {"beta_v2", 0.84}, {"A_v2", 500}}));

  return t;
}

void check_preset(VdType type, SignalKind kind, const ClassPreset& preset) {
  const std::string where =
      std::string(to_string(kind)) + "/" + std::string(to_string(type)) + ": ";
  for (const auto& [name, range] : preset.ranges) {
    if (!is_symbol(kind, name) || name == "theta" || name == "cp") {
      fail(ErrorCategory::kInvalidParameter, where + "'" + name + "' cannot be ranged");
    }
    if (!std::isfinite(range.lo) || !std::isfinite(range.hi) || range.lo > range.hi) {
      fail(ErrorCategory::kInvalidParameter, where + "range of '" + name + "' needs lo <= hi");
    }
    if (range.relative()) {
      const auto ref = preset.ranges.find(range.relative_to);
      if (ref == preset.ranges.end() || ref->second.relative()) {
        fail(ErrorCategory::kInvalidParameter,
             where + "'" + name + "' is relative to '" + range.relative_to +
                 "', which must have an absolute range");
      }
    }
  }
  for (const auto& [name, value] : preset.nominal) {
    if (!is_symbol(kind, name) || name == "theta" || name == "cp" || !std::isfinite(value)) {
      fail(ErrorCategory::kInvalidParameter, where + "bad nominal entry '" + name + "'");
    }
  }
}

json range_to_json(const ParamRange& r) {
  if (r.relative()) return json{{"range", {r.lo, r.hi}}, {"relative_to", r.relative_to}};
  if (r.fixed()) return r.lo;
  return json::array({r.lo, r.hi});
}

ParamRange range_from_json(const json& j, const std::string& name) {
  const auto bad = [&name]() -> ParamRange {
    fail(ErrorCategory::kSchemaMismatch, "preset entry '" + name + "' must be a number, "
         "[lo, hi] or {\"range\": [lo, hi], \"relative_to\": symbol}");
  };
  if (j.is_number()) return fixed_at(j.get<double>());
  if (j.is_array()) {
    if (j.size() != 2 || !j[0].is_number() || !j[1].is_number()) return bad();
    return span_of(j[0].get<double>(), j[1].get<double>());
  }
  if (j.is_object() && j.contains("range")) {
    ParamRange r = range_from_json(j.at("range"), name);
    if (j.contains("relative_to")) {
      if (!j.at("relative_to").is_string()) return bad();
      r.relative_to = j.at("relative_to").get<std::string>();
    }
    return r;
  }
  return bad();
}

}  // namespace

const PresetTable& PresetTable::builtin() {
  static const PresetTable table = make_builtin();
  return table;
}

bool PresetTable::has(VdType type, SignalKind kind) const {
  return presets_.contains({type, kind});
}

const ClassPreset& PresetTable::at(VdType type, SignalKind kind) const {
  const auto it = presets_.find({type, kind});
  if (it == presets_.end()) {
    std::string supported;
    for (const auto& [key, preset] : presets_) {
      if (key.second != kind) continue;
      if (!supported.empty()) supported += ", ";
      supported += to_string(key.first);
    }
    std::string hint;
    if (kind == SignalKind::kVolume && presets_.contains({type, SignalKind::kPressure}) &&
        presets_.contains({VdType::kNormal, SignalKind::kVolume})) {
      hint = "; this class has no distinct volume shape, synthesize its pressure waveform or a "
             "normal volume waveform instead";
    }
    fail(ErrorCategory::kUnsupportedClass,
         "no " + std::string(to_string(kind)) + " preset for '" +
             std::string(to_string(type)) + "' (supported: " + supported + ")" + hint);
  }
  return it->second;
}

std::vector<ClassKey> PresetTable::classes() const {
  std::vector<ClassKey> out;
  for (const auto& [key, preset] : presets_) out.push_back(key);
  return out;
}

void PresetTable::set(VdType type, SignalKind kind, ClassPreset preset) {
  check_preset(type, kind, preset);
  presets_[{type, kind}] = std::move(preset);
}

void PresetTable::set_theta(double theta) {
  if (!std::isfinite(theta) || theta <= 0.0) {
    fail(ErrorCategory::kInvalidParameter, "theta must be positive");
  }
  theta_ = theta;
}

void PresetTable::set_cp(double cp) {
  if (!std::isfinite(cp) || cp < 0.0) fail(ErrorCategory::kInvalidParameter, "cp must be >= 0");
  cp_ = cp;
}

void PresetTable::set_nominal_cp(double cp) {
  if (!std::isfinite(cp) || cp < 0.0) fail(ErrorCategory::kInvalidParameter, "cp must be >= 0");
  nominal_cp_ = cp;
}

json PresetTable::to_json() const {
  json doc = {{"format", kFormat}, {"version", kVersion}, {"theta", theta_},
              {"cp", cp_}, {"nominal_cp", nominal_cp_}};
  for (const auto& [key, preset] : presets_) {
    json ranges = json::object();
    for (const auto& [name, range] : preset.ranges) ranges[name] = range_to_json(range);
    json nominal = json::object();
    for (const auto& [name, value] : preset.nominal) nominal[name] = value;
    doc[std::string(to_string(key.second))][std::string(to_string(key.first))] = {
        {"ranges", ranges}, {"nominal", nominal}};
  }
  return doc;
}

PresetTable PresetTable::from_json(const json& doc) {
  try {
    if (doc.value("format", "") != kFormat || doc.value("version", 0) != kVersion) {
      fail(ErrorCategory::kSchemaMismatch, "not a vdlv-presets version 1 document");
    }
    PresetTable t;
    t.set_theta(doc.at("theta").get<double>());
    t.set_cp(doc.at("cp").get<double>());
    t.set_nominal_cp(doc.value("nominal_cp", 3.0));
    for (SignalKind kind : {SignalKind::kPressure, SignalKind::kVolume}) {
      const std::string kind_name(to_string(kind));
      if (!doc.contains(kind_name)) continue;
      for (const auto& [class_name, entry] : doc.at(kind_name).items()) {
        const auto type = parse_vd_type(class_name);
        if (!type) fail(ErrorCategory::kSchemaMismatch, "unknown class '" + class_name + "'");
        ClassPreset preset;
        for (const auto& [name, value] : entry.at("ranges").items()) {
          preset.ranges[name] = range_from_json(value, name);
        }
        if (entry.contains("nominal")) {
          for (const auto& [name, value] : entry.at("nominal").items()) {
            preset.nominal[name] = value.get<double>();
          }
        }
        t.set(*type, kind, std::move(preset));
      }
    }
    return t;
  } catch (const json::exception& e) {
    fail(ErrorCategory::kSchemaMismatch, std::string("preset table: ") + e.what());
  }
}

PresetTable PresetTable::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCategory::kIo, "cannot open preset table " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    fail(ErrorCategory::kSchemaMismatch, path.string() + ": " + e.what());
  }
  return from_json(doc);
}

void PresetTable::save(const std::filesystem::path& path) const {
  std::ofstream out(path);
  if (!out) fail(ErrorCategory::kIo, "cannot write " + path.string());
  out << to_json().dump(2) << '\n';
}

std::string PresetTable::digest() const { return sha256_hex(to_json().dump()); }

double uniform_in(std::mt19937_64& rng, double lo, double hi) {
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return std::min(hi, lo + (hi - lo) * u);
}

SymbolValues sample_symbols(VdType type, SignalKind kind, std::mt19937_64& rng,
                            const PresetTable& table) {
  const ClassPreset& preset = table.at(type, kind);
  const auto draw = [&rng](const ParamRange& r) {
    return r.fixed() ? r.lo : uniform_in(rng, r.lo, r.hi);
  };

  SymbolValues values;
  for (std::string_view name : symbols_for(kind)) values[std::string(name)] = inert_default(name);
  values["theta"] = table.theta();
  if (kind == SignalKind::kPressure) values["cp"] = table.cp();

  for (std::string_view name : symbols_for(kind)) {
    const auto it = preset.ranges.find(name);
    if (it != preset.ranges.end() && !it->second.relative()) {
      values[std::string(name)] = draw(it->second);
    }
  }
  for (std::string_view name : symbols_for(kind)) {
    const auto it = preset.ranges.find(name);
    if (it != preset.ranges.end() && it->second.relative()) {
      values[std::string(name)] = draw(it->second) * values.at(it->second.relative_to);
    }
  }
  return values;
}

ModelParams sample_params(VdType type, SignalKind kind, std::mt19937_64& rng,
                          const PresetTable& table) {
  return params_from_symbols(kind, sample_symbols(type, kind, rng, table));
}

PressureParams sample_pressure_params(VdType type, std::mt19937_64& rng,
                                      const PresetTable& table) {
  return std::get<PressureParams>(sample_params(type, SignalKind::kPressure, rng, table));
}

VolumeParams sample_volume_params(VdType type, std::mt19937_64& rng, const PresetTable& table) {
  return std::get<VolumeParams>(sample_params(type, SignalKind::kVolume, rng, table));
}

ModelParams nominal_params(VdType type, SignalKind kind, const PresetTable& table) {
  SymbolValues values = table.at(type, kind).nominal;
  values["theta"] = table.theta();
  if (kind == SignalKind::kPressure) values["cp"] = table.nominal_cp();
  return params_from_symbols(kind, values);
}

}  // namespace vdlv
