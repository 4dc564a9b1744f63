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

#include "vdlv/normalize.hpp"

#include <cmath>
#include <string>

#include "vdlv/error.hpp"

namespace vdlv {
namespace {

// Two-pass mean/variance over any range of series; the residual pass keeps
// normalized output centered to round-off.
template <typename Series>
ZScoreStats two_pass(const Series& series, std::size_t total) {
  const double count = static_cast<double>(total);
  double sum = 0.0;
  for (const auto& s : series) {
    for (double v : s) sum += v;
  }
  double mean = sum / count;
  double residual = 0.0;
  for (const auto& s : series) {
    for (double v : s) residual += v - mean;
  }
  mean += residual / count;
  double ss = 0.0;
  for (const auto& s : series) {
    for (double v : s) ss += (v - mean) * (v - mean);
  }
  return {mean, std::sqrt(ss / count)};
}

}  // namespace

ZScoreStats zscore_stats(std::span<const double> values) {
  if (values.size() < 2) {
    fail(ErrorCategory::kInvalidParameter,
         "z-score needs at least 2 samples (got " + std::to_string(values.size()) + ")");
  }
  const std::span<const double> one[] = {values};
  return two_pass(one, values.size());
}

ZScoreStats pooled_zscore_stats(std::span<const std::vector<double>> series) {
  std::size_t total = 0;
  for (const auto& s : series) total += s.size();
  if (total < 2) fail(ErrorCategory::kInvalidParameter, "z-score needs at least 2 samples");
  return two_pass(series, total);
}

std::vector<double> apply_zscore(std::span<const double> values, const ZScoreStats& stats) {
  std::vector<double> out(values.size(), 0.0);
  if (!(stats.stddev > 0.0)) return out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    out[i] = (values[i] - stats.mean) / stats.stddev;
  }
  return out;
}

std::vector<double> zscore(std::span<const double> values) {
  return apply_zscore(values, zscore_stats(values));
}

}  // namespace vdlv
