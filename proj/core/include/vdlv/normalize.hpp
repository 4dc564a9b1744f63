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

#ifndef VDLV_NORMALIZE_HPP_
#define VDLV_NORMALIZE_HPP_

#include <span>
#include <vector>

namespace vdlv {

// Population mean and standard deviation.
struct ZScoreStats {
  double mean = 0.0;
  double stddev = 0.0;
};

ZScoreStats zscore_stats(std::span<const double> values);

// Pooled statistics over several series (dataset-level normalization).
ZScoreStats pooled_zscore_stats(std::span<const std::vector<double>> series);

// (x - mean) / stddev; all zeros when stddev is 0.
std::vector<double> apply_zscore(std::span<const double> values, const ZScoreStats& stats);

// Per-signal z-score. Throws Error(kInvalidParameter) for fewer than 2 samples.
std::vector<double> zscore(std::span<const double> values);

}  // namespace vdlv

#endif  // VDLV_NORMALIZE_HPP_
