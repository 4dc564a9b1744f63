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

#ifndef VDLV_PLOT_HPP_
#define VDLV_PLOT_HPP_

#include <filesystem>
#include <string>

#include "vdlv/model.hpp"

namespace vdlv {

// "t,value" per sample, no header, shortest round-trip decimal formatting.
std::string waveform_csv(const Waveform& waveform);

// Standalone SVG line plot with axes, tick labels and `title`.
std::string waveform_svg(const Waveform& waveform, const std::string& title);

void write_text_file(const std::filesystem::path& path, const std::string& contents);

}  // namespace vdlv

#endif  // VDLV_PLOT_HPP_
