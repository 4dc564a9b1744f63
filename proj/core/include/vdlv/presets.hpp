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

#ifndef VDLV_PRESETS_HPP_
#define VDLV_PRESETS_HPP_

// Per-class parameter ranges and nominal (figure) values for the pressure and
// volume models, plus seeded uniform sampling from those ranges.
//
// Table file format (JSON):
//
//   {
//     "format": "vdlv-presets", "version": 1,
//     "theta": 0.3, "cp": 0.0, "nominal_cp": 3.0,
//     "pressure": {
//       "double_trigger": {
//         "ranges": {
//           "alpha_p1": [20, 60],                                  // uniform [lo, hi]
//           "phi_p1": -0.4,                                        // fixed
//           "A_p3": {"range": [1.0, 1.2], "relative_to": "A_p1"}   // multiple of A_p1
//         },
//         "nominal": {"alpha_p1": 50, ...}
//       }, ...
//     },
//     "volume": { ... }
//   }
//
// Symbols a class leaves out take their inert default (see symbols.hpp).

#include <cstdint>
#include <filesystem>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "vdlv/model.hpp"
#include "vdlv/symbols.hpp"

namespace vdlv {

struct ParamRange {
  double lo = 0.0;
  double hi = 0.0;
  std::string relative_to;  // empty: absolute range

  bool relative() const { return !relative_to.empty(); }
  bool fixed() const { return lo == hi; }

  friend bool operator==(const ParamRange&, const ParamRange&) = default;
};

struct ClassPreset {
  std::map<std::string, ParamRange, std::less<>> ranges;
  SymbolValues nominal;

  friend bool operator==(const ClassPreset&, const ClassPreset&) = default;
};

using ClassKey = std::pair<VdType, SignalKind>;

class PresetTable {
 public:
  // Ranges and nominal values of the published model tables.
  static const PresetTable& builtin();

  static PresetTable from_json(const nlohmann::json& doc);
  static PresetTable load(const std::filesystem::path& path);

  nlohmann::json to_json() const;
  void save(const std::filesystem::path& path) const;
  // SHA-256 of the canonical JSON dump.
  std::string digest() const;

  bool has(VdType type, SignalKind kind) const;
  // Throws Error(kUnsupportedClass) when no preset exists.
  const ClassPreset& at(VdType type, SignalKind kind) const;
  std::vector<ClassKey> classes() const;

  // Replaces or adds a class preset after checking it.
  void set(VdType type, SignalKind kind, ClassPreset preset);

  double theta() const { return theta_; }
  double cp() const { return cp_; }
  double nominal_cp() const { return nominal_cp_; }
  void set_theta(double theta);
  void set_cp(double cp);
  void set_nominal_cp(double cp);

  friend bool operator==(const PresetTable&, const PresetTable&) = default;

 private:
  std::map<ClassKey, ClassPreset> presets_;
  double theta_ = 0.3;
  double cp_ = 0.0;
  double nominal_cp_ = 3.0;
};

// Draws every ranged symbol independently and uniformly (absolute ranges in
// canonical symbol order, then relative ones), fills theta and cp from the
// table and leaves the rest inert. The generator is only advanced for
// non-degenerate ranges.
SymbolValues sample_symbols(VdType type, SignalKind kind, std::mt19937_64& rng,
                            const PresetTable& table = PresetTable::builtin());

PressureParams sample_pressure_params(VdType type, std::mt19937_64& rng,
                                      const PresetTable& table = PresetTable::builtin());
VolumeParams sample_volume_params(VdType type, std::mt19937_64& rng,
                                  const PresetTable& table = PresetTable::builtin());
ModelParams sample_params(VdType type, SignalKind kind, std::mt19937_64& rng,
                          const PresetTable& table = PresetTable::builtin());

// Parenthesized figure values; pressure fixtures use the table's nominal_cp.
ModelParams nominal_params(VdType type, SignalKind kind,
                           const PresetTable& table = PresetTable::builtin());

// Uniform double in [lo, hi] from the top 53 bits of one generator output.
double uniform_in(std::mt19937_64& rng, double lo, double hi);

}  // namespace vdlv

#endif  // VDLV_PRESETS_HPP_
