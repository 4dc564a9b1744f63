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

#include "vdlv/morphology.hpp"

#include <algorithm>
#include <cmath>

#include "vdlv/error.hpp"

namespace vdlv {
namespace {

struct Run {
  int sign;
  std::size_t start;  // index into the second-difference series
  std::size_t length;
};

// Significant same-sign runs of d2[i] = x[i] - 2 x[i+1] + x[i+2] over
// [from, to), short runs dropped and neighbours of equal sign merged.
std::vector<Run> curvature_runs(std::span<const double> x, std::size_t from, std::size_t to,
                                double tol, std::size_t min_run) {
  std::vector<Run> raw;
  to = std::min(to, x.size() >= 2 ? x.size() - 2 : 0);
  for (std::size_t i = from; i < to; ++i) {
    const double d2 = x[i] - 2.0 * x[i + 1] + x[i + 2];
    const int sign = d2 > tol ? 1 : (d2 < -tol ? -1 : 0);
    if (sign == 0) continue;
    if (!raw.empty() && raw.back().sign == sign && raw.back().start + raw.back().length == i) {
      ++raw.back().length;
    } else {
      raw.push_back({sign, i, 1});
    }
  }
  std::vector<Run> runs;
  for (const Run& r : raw) {
    if (r.length < min_run) continue;
    if (!runs.empty() && runs.back().sign == r.sign) {
      runs.back().length = r.start + r.length - runs.back().start;
    } else {
      runs.push_back(r);
    }
  }
  return runs;
}

}  // namespace

std::vector<std::size_t> find_peaks(std::span<const double> x, double threshold,
                                    double min_prominence) {
  std::vector<std::size_t> candidates;
  for (std::size_t i = 1; i + 1 < x.size(); ++i) {
    if (!(x[i] > x[i - 1])) continue;
    std::size_t j = i + 1;
    while (j < x.size() && x[j] == x[i]) ++j;
    if (j < x.size() && x[j] < x[i] && x[i] > threshold) candidates.push_back(i);
  }

  std::vector<std::size_t> peaks;
  for (std::size_t p : candidates) {
    double left_min = x[p];
    for (std::size_t k = p; k-- > 0;) {
      if (x[k] > x[p]) break;
      left_min = std::min(left_min, x[k]);
    }
    double right_min = x[p];
    for (std::size_t k = p + 1; k < x.size(); ++k) {
      if (x[k] > x[p]) break;
      right_min = std::min(right_min, x[k]);
    }
    if (x[p] - std::max(left_min, right_min) >= min_prominence) peaks.push_back(p);
  }
  return peaks;
}

std::vector<BreathFeatures> analyze_breaths(std::span<const double> x,
                                            const BreathReference& reference,
                                            const MorphologyOptions& options) {
  if (!(reference.samples_per_breath >= 8.0) || !(reference.amplitude > 0.0)) {
    fail(ErrorCategory::kInvalidParameter,
         "breath analysis needs a positive amplitude and at least 8 samples per breath");
  }
  const double level = reference.baseline + options.peak_threshold * reference.amplitude;
  const double onset_level = reference.baseline + 0.1 * reference.amplitude;
  const double tol = options.curvature_tolerance * reference.amplitude;
  const auto peaks =
      find_peaks(x, level, options.min_prominence * reference.amplitude);

  std::size_t anchor = 0;
  while (anchor + 1 < x.size() && !(x[anchor] < level && x[anchor + 1] >= level)) ++anchor;
  if (anchor + 1 >= x.size()) return {};
  ++anchor;

  const double period = reference.samples_per_breath;
  const auto margin = static_cast<std::size_t>(std::lround(0.1 * period));
  std::vector<BreathFeatures> out;
  for (std::size_t k = 0;; ++k) {
    const auto start = anchor + static_cast<std::size_t>(std::lround(static_cast<double>(k) * period));
    const auto stop =
        anchor + static_cast<std::size_t>(std::lround(static_cast<double>(k + 1) * period));
    BreathFeatures f;
    f.begin = start > margin ? start - margin : 0;
    f.end = stop > margin ? stop - margin : 0;
    if (f.end > x.size()) break;

    std::vector<std::size_t> in_window;
    for (std::size_t p : peaks) {
      if (p >= f.begin && p < f.end) in_window.push_back(p);
    }
    f.peaks = in_window.size();

    // Landmarks: threshold crossing, rise start and the first peak after it.
    std::size_t crossing = f.begin;
    while (crossing + 1 < f.end && !(x[crossing] < level && x[crossing + 1] >= level)) ++crossing;
    const auto first_peak =
        std::find_if(in_window.begin(), in_window.end(), [crossing](std::size_t p) { return p > crossing; });
    if (crossing + 1 >= f.end || first_peak == in_window.end()) {
      out.push_back(f);
      continue;
    }
    std::size_t rise_start = crossing;
    while (rise_start > f.begin && x[rise_start] > onset_level) --rise_start;
    const std::size_t peak = *first_peak;
    const double span = static_cast<double>(peak - rise_start);
    const auto at = [&](double fraction) {
      return rise_start + static_cast<std::size_t>(std::lround(fraction * span));
    };

    const auto rise = curvature_runs(x, rise_start, peak, tol, options.min_run);
    for (std::size_t r = 1; r < rise.size(); ++r) {
      if (rise[r].sign != 1 || rise[r - 1].sign != -1) continue;
      if (rise[r].start >= at(0.2) && rise[r].start < at(0.8)) f.mid_inspiratory_concavity = true;
      if (rise[r].start >= at(0.8)) f.end_inspiratory_bump = true;
    }

    const auto tail = curvature_runs(x, peak, f.end, tol, options.min_run);
    // tail: the fall (concave), the convex decay, then anything concave is extra.
    bool seen_convex = false;
    for (const Run& r : tail) {
      if (r.sign == 1) seen_convex = true;
      if (r.sign == -1 && seen_convex) f.post_inspiratory_deformation = true;
    }
    out.push_back(f);
  }
  return out;
}

bool is_flat(std::span<const double> x, double level, double tolerance) {
  return std::all_of(x.begin(), x.end(),
                     [&](double v) { return std::abs(v - level) <= tolerance; });
}

}  // namespace vdlv
