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

#ifndef VDLV_VD_TYPE_HPP_
#define VDLV_VD_TYPE_HPP_

#include <array>
#include <optional>
#include <string_view>

namespace vdlv {

// Breath classes: normal breathing plus six ventilator-dyssynchrony types.
// Reverse triggering is not modeled.
enum class VdType {
  kNormal,
  kIneffectiveTrigger,
  kAutoTrigger,
  kFlowLimited,
  kDoubleTrigger,
  kDelayedCycling,
  kEarlyCycling,
};

inline constexpr std::array<VdType, 7> kAllVdTypes = {
    VdType::kNormal,        VdType::kIneffectiveTrigger, VdType::kAutoTrigger,
    VdType::kFlowLimited,   VdType::kDoubleTrigger,      VdType::kDelayedCycling,
    VdType::kEarlyCycling,
};

enum class SignalKind { kPressure, kVolume };

// Snake-case names ("double_trigger") are used in files and on the command line.
std::string_view to_string(VdType type);
std::string_view to_string(SignalKind kind);

std::optional<VdType> parse_vd_type(std::string_view name);
std::optional<SignalKind> parse_signal_kind(std::string_view name);

}  // namespace vdlv

#endif  // VDLV_VD_TYPE_HPP_
