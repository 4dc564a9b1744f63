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

#ifndef VDLV_SYMBOLS_HPP_
#define VDLV_SYMBOLS_HPP_

// Flat symbol view of model parameters. These names are the keys used in the
// preset table file and in the "params" object of dataset records.
//
//   pressure: theta cp alpha_p1 beta_p1 phi_p1 gamma_p1 gamma_p2 A_p1
//             alpha_p2 beta_p2 phi_p2 A_p2 alpha_p3 beta_p3 phi_p3 A_p3
//   volume:   theta alpha_v1 beta_v1 phi_v1 gamma_v1 gamma_v2 A_v1
//             alpha_v2 beta_v2 phi_v2 A_v2

#include <map>
#include <span>
#include <string>
#include <string_view>

#include "vdlv/model.hpp"

namespace vdlv {

using SymbolValues = std::map<std::string, double, std::less<>>;

// Canonical symbol order for a signal kind (also the sampling draw order).
std::span<const std::string_view> symbols_for(SignalKind kind);
bool is_symbol(SignalKind kind, std::string_view name);

// Value a symbol takes when a preset leaves it unset: amplitudes 0 (inert
// component), alpha 1, gammas 1, everything else 0.
double inert_default(std::string_view name);

SymbolValues to_symbols(const ModelParams& params);

// Missing symbols take their inert default; unknown symbols are rejected.
ModelParams params_from_symbols(SignalKind kind, const SymbolValues& values);

}  // namespace vdlv

#endif  // VDLV_SYMBOLS_HPP_
