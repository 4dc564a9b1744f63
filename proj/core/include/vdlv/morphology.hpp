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

#ifndef VDLV_MORPHOLOGY_HPP_
#define VDLV_MORPHOLOGY_HPP_

// Breath-level shape features used to check that each class produces its
// characteristic deformation: peak counts per breath period and curvature
// (second-difference sign) patterns around inspiration.

#include <cstddef>
#include <span>
#include <vector>

namespace vdlv {

struct BreathReference {
  double baseline = 0.0;            // CP for pressure, 0 for volume
  double amplitude = 1.0;           // breath amplitude (A_p1 / A_v1)
  double samples_per_breath = 0.0;  // 1 / (theta * dt)
};

struct MorphologyOptions {
  double peak_threshold = 0.5;   // peaks must exceed baseline + this * amplitude
  double min_prominence = 0.05;  // fraction of amplitude
  double curvature_tolerance = 1e-5;  // |second difference| below tol * amplitude is neutral
  std::size_t min_run = 3;       // samples in a significant curvature run
};

// Local maxima above `threshold` whose topographic prominence is at least
// `min_prominence`. A plateau counts once, at its first sample.
std::vector<std::size_t> find_peaks(std::span<const double> x, double threshold,
                                    double min_prominence);

struct BreathFeatures {
  std::size_t begin = 0;  // window [begin, end) of one breath period
  std::size_t end = 0;
  std::size_t peaks = 0;
  // Convex stretch between 20% and 80% of the rise (scooped inspiration).
  bool mid_inspiratory_concavity = false;
  // Convex stretch in the last 20% of the rise (bump at end of inspiration).
  bool end_inspiratory_bump = false;
  // Concave stretch in the expiratory tail after the initial fall.
  bool post_inspiratory_deformation = false;
};

// Splits the signal into complete breath periods anchored at the first
// crossing of the peak threshold and extracts features per period.
std::vector<BreathFeatures> analyze_breaths(std::span<const double> x,
                                            const BreathReference& reference,
                                            const MorphologyOptions& options = {});

bool is_flat(std::span<const double> x, double level, double tolerance);

}  // namespace vdlv

#endif  // VDLV_MORPHOLOGY_HPP_
