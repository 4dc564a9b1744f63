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

#ifndef VDLV_METRICS_HPP_
#define VDLV_METRICS_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "vdlv/model.hpp"

namespace vdlv {

// Mean absolute error of equal-length series.
double mae(std::span<const double> a, std::span<const double> b);

// Dynamic time warping distance: sqrt of the minimum, over monotone
// alignment paths with steps (1,0), (0,1), (1,1) from (0,0) to (n-1,m-1), of
// the summed squared local costs |a_i - b_j|. No warping window.
double dtw(std::span<const double> a, std::span<const double> b);

enum class PsdWindow { kNone, kHann };
std::string_view to_string(PsdWindow window);
std::optional<PsdWindow> parse_psd_window(std::string_view name);

// One-sided periodogram: |X_k|^2 / sum(w_i^2) for k = 0..n/2, interior bins
// doubled. With kNone (w = 1) the divisor is n.
std::vector<double> periodogram(std::span<const double> x, PsdWindow window = PsdWindow::kNone);

// 1 - ||P_ref - P_other|| / ||P_ref|| with Euclidean norms over periodogram
// bins. Needs equal lengths >= 4; throws Error(kInvalidParameter) when the
// reference spectrum is identically zero.
double spectral_similarity(std::span<const double> reference, std::span<const double> other,
                           PsdWindow window = PsdWindow::kNone);

enum class Pairing { kNearest, kIndex };

std::string_view to_string(Pairing pairing);
std::optional<Pairing> parse_pairing(std::string_view name);

struct EvalOptions {
  Pairing pairing = Pairing::kNearest;
  bool zscore = true;     // z-score every signal before scoring
  bool per_class = true;  // one row per label; requires labeled inputs
  PsdWindow window = PsdWindow::kNone;
  std::size_t workers = 0;  // 0: hardware concurrency
};

struct MetricRow {
  SignalKind kind = SignalKind::kPressure;
  std::optional<VdType> label;  // nullopt: overall row of the kind
  std::size_t count = 0;        // generated signals scored
  double mae = 0.0;
  double dtw = 0.0;
  double ss = 0.0;
};

struct MetricReport {
  Pairing pairing = Pairing::kNearest;
  bool zscored = true;
  PsdWindow window = PsdWindow::kNone;
  std::size_t real_count = 0;
  std::size_t generated_count = 0;
  std::vector<MetricRow> rows;  // per kind: class rows, then the overall row
};

// Scores every generated signal against a real partner of the same kind (and
// label, with per_class): under kNearest the real signal of least MAE, under
// kIndex the one at the same position within the class. Class rows are means
// over their generated signals; the overall row of a kind is the
// count-weighted mean of its class rows.
MetricReport evaluate_sets(std::span<const Waveform> real, std::span<const Waveform> generated,
                           const EvalOptions& options = {});

// Fixed-width text table, one row per line.
std::string format_report(const MetricReport& report);
nlohmann::ordered_json report_to_json(const MetricReport& report);

}  // namespace vdlv

#endif  // VDLV_METRICS_HPP_
