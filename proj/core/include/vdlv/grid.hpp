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

#ifndef VDLV_GRID_HPP_
#define VDLV_GRID_HPP_

#include <cstddef>

namespace vdlv {

// Uniform time grid t_i = t0 + i * dt, i = 0..n-1. The default matches the
// 1201-sample input length of the discriminator (12 s at 100 Hz).
struct SamplingGrid {
  double t0 = 0.0;
  double dt = 0.01;
  std::size_t n = 1201;

  // Throws Error(kInvalidParameter) unless dt > 0, n >= 2 and t0, dt finite.
  void validate() const;

  double time(std::size_t i) const { return t0 + static_cast<double>(i) * dt; }
  double duration() const { return static_cast<double>(n - 1) * dt; }

  friend bool operator==(const SamplingGrid&, const SamplingGrid&) = default;
};

}  // namespace vdlv

#endif  // VDLV_GRID_HPP_
