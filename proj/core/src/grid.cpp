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

#include "vdlv/grid.hpp"

#include <cmath>
#include <string>

#include "vdlv/error.hpp"

namespace vdlv {

void SamplingGrid::validate() const {
  if (!std::isfinite(t0) || !std::isfinite(dt) || dt <= 0.0) {
    fail(ErrorCategory::kInvalidParameter,
         "sampling grid needs finite t0 and dt > 0 (dt=" + std::to_string(dt) + ")");
  }
  if (n < 2) {
    fail(ErrorCategory::kInvalidParameter,
         "sampling grid needs at least 2 samples (n=" + std::to_string(n) + ")");
  }
}

}  // namespace vdlv
