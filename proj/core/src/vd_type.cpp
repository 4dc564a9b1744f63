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

#include "vdlv/vd_type.hpp"

namespace vdlv {

std::string_view to_string(VdType type) {
  switch (type) {
    case VdType::kNormal: return "normal";
    case VdType::kIneffectiveTrigger: return "ineffective_trigger";
    case VdType::kAutoTrigger: return "auto_trigger";
    case VdType::kFlowLimited: return "flow_limited";
    case VdType::kDoubleTrigger: return "double_trigger";
    case VdType::kDelayedCycling: return "delayed_cycling";
    case VdType::kEarlyCycling: return "early_cycling";
  }
  return "unknown";
}

std::string_view to_string(SignalKind kind) {
  return kind == SignalKind::kPressure ? "pressure" : "volume";
}

std::optional<VdType> parse_vd_type(std::string_view name) {
  for (VdType type : kAllVdTypes) {
    if (to_string(type) == name) return type;
  }
  return std::nullopt;
}

std::optional<SignalKind> parse_signal_kind(std::string_view name) {
  if (name == "pressure") return SignalKind::kPressure;
  if (name == "volume") return SignalKind::kVolume;
  return std::nullopt;
}

}  // namespace vdlv
