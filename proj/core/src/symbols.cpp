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

#include "vdlv/symbols.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "vdlv/error.hpp"

namespace vdlv {
namespace {

constexpr std::array<std::string_view, 16> kPressureSymbols = {
    "theta",    "cp",      "alpha_p1", "beta_p1", "phi_p1", "gamma_p1",
    "gamma_p2", "A_p1",    "alpha_p2", "beta_p2", "phi_p2", "A_p2",
    "alpha_p3", "beta_p3", "phi_p3",   "A_p3",
};

constexpr std::array<std::string_view, 11> kVolumeSymbols = {
    "theta",    "alpha_v1", "beta_v1", "phi_v1", "gamma_v1", "gamma_v2",
    "A_v1",     "alpha_v2", "beta_v2", "phi_v2", "A_v2",
};

double lookup(const SymbolValues& values, std::string_view name) {
  const auto it = values.find(name);
  return it == values.end() ? inert_default(name) : it->second;
}

}  // namespace

std::span<const std::string_view> symbols_for(SignalKind kind) {
  if (kind == SignalKind::kPressure) return kPressureSymbols;
  return kVolumeSymbols;
}

bool is_symbol(SignalKind kind, std::string_view name) {
  const auto symbols = symbols_for(kind);
  return std::find(symbols.begin(), symbols.end(), name) != symbols.end();
}

double inert_default(std::string_view name) {
  if (name.starts_with("alpha") || name.starts_with("gamma")) return 1.0;
  if (name == "theta") return 0.3;
  return 0.0;
}

SymbolValues to_symbols(const ModelParams& params) {
  SymbolValues out;
  if (const auto* p = std::get_if<PressureParams>(&params)) {
    out["theta"] = p->theta;
    out["cp"] = p->cp;
    out["alpha_p1"] = p->breath.pulse.alpha;
    out["beta_p1"] = p->breath.pulse.beta;
    out["phi_p1"] = p->breath.pulse.phi;
    out["gamma_p1"] = p->breath.smoothing.gamma_rise;
    out["gamma_p2"] = p->breath.smoothing.gamma_fall;
    out["A_p1"] = p->breath.pulse.amplitude;
    out["alpha_p2"] = p->onset_deformation.alpha;
    out["beta_p2"] = p->onset_deformation.beta;
    out["phi_p2"] = p->onset_deformation.phi;
    out["A_p2"] = p->onset_deformation.amplitude;
    out["alpha_p3"] = p->late_deformation.alpha;
    out["beta_p3"] = p->late_deformation.beta;
    out["phi_p3"] = p->late_deformation.phi;
    out["A_p3"] = p->late_deformation.amplitude;
  } else {
    const auto& v = std::get<VolumeParams>(params);
    out["theta"] = v.theta;
    out["alpha_v1"] = v.breath.pulse.alpha;
    out["beta_v1"] = v.breath.pulse.beta;
    out["phi_v1"] = v.breath.pulse.phi;
    out["gamma_v1"] = v.breath.smoothing.gamma_rise;
    out["gamma_v2"] = v.breath.smoothing.gamma_fall;
    out["A_v1"] = v.breath.pulse.amplitude;
    out["alpha_v2"] = v.deformation.alpha;
    out["beta_v2"] = v.deformation.beta;
    out["phi_v2"] = v.deformation.phi;
    out["A_v2"] = v.deformation.amplitude;
  }
  return out;
}

ModelParams params_from_symbols(SignalKind kind, const SymbolValues& values) {
  for (const auto& [name, value] : values) {
    if (!is_symbol(kind, name)) {
      fail(ErrorCategory::kInvalidParameter,
           "unknown " + std::string(to_string(kind)) + " symbol '" + name + "'");
    }
  }
  const auto get = [&values](std::string_view name) { return lookup(values, name); };

  if (kind == SignalKind::kPressure) {
    PressureParams p;
    p.theta = get("theta");
    p.cp = get("cp");
    p.breath.pulse = {get("alpha_p1"), get("beta_p1"), get("phi_p1"), get("A_p1")};
    p.breath.smoothing = {get("gamma_p1"), get("gamma_p2")};
    p.onset_deformation = {get("alpha_p2"), get("beta_p2"), get("phi_p2"), get("A_p2")};
    p.late_deformation = {get("alpha_p3"), get("beta_p3"), get("phi_p3"), get("A_p3")};
    return p;
  }
  VolumeParams v;
  v.theta = get("theta");
  v.breath.pulse = {get("alpha_v1"), get("beta_v1"), get("phi_v1"), get("A_v1")};
  v.breath.smoothing = {get("gamma_v1"), get("gamma_v2")};
  v.deformation = {get("alpha_v2"), get("beta_v2"), get("phi_v2"), get("A_v2")};
  return v;
}

}  // namespace vdlv
