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

#include "vdlv/metrics.hpp"

#include <fftw3.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <cstdio>
#include <limits>
#include <map>
#include <mutex>
#include <thread>

#include "vdlv/error.hpp"
#include "vdlv/normalize.hpp"

namespace vdlv {
namespace {

// FFTW planning is not thread-safe; plans are created once per length under a
// lock and executed through the new-array interface, which is.
class R2cPlans {
 public:
  ~R2cPlans() {
    for (auto& [n, plan] : plans_) fftw_destroy_plan(plan);
  }

  fftw_plan get(std::size_t n) {
    std::lock_guard lock(mutex_);
    auto it = plans_.find(n);
    if (it != plans_.end()) return it->second;
    std::vector<double> in(n);
    std::vector<std::complex<double>> out(n / 2 + 1);
    fftw_plan plan = fftw_plan_dft_r2c_1d(static_cast<int>(n), in.data(),
                                          reinterpret_cast<fftw_complex*>(out.data()),
                                          FFTW_ESTIMATE | FFTW_UNALIGNED);
    plans_.emplace(n, plan);
    return plan;
  }

 private:
  std::mutex mutex_;
  std::map<std::size_t, fftw_plan> plans_;
};

R2cPlans& plans() {
  static R2cPlans instance;
  return instance;
}

void require_same_length(std::span<const double> a, std::span<const double> b, const char* what) {
  if (a.size() != b.size()) {
    fail(ErrorCategory::kInvalidParameter, std::string(what) + ": lengths differ (" +
                                               std::to_string(a.size()) + " vs " +
                                               std::to_string(b.size()) + ")");
  }
}

double norm2(std::span<const double> v) {
  double ss = 0.0;
  for (double x : v) ss += x * x;
  return std::sqrt(ss);
}

struct Scored {
  std::size_t generated = 0;
  double mae = 0.0;
  double dtw = 0.0;
  double ss = 0.0;
};

struct Group {
  SignalKind kind;
  std::optional<VdType> label;
  std::vector<std::size_t> real;
  std::vector<std::size_t> generated;
};

std::string class_name(const MetricRow& row) {
  return row.label ? std::string(to_string(*row.label)) : "overall";
}

}  // namespace

double mae(std::span<const double> a, std::span<const double> b) {
  require_same_length(a, b, "mae");
  if (a.empty()) fail(ErrorCategory::kInvalidParameter, "mae: empty series");
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += std::abs(a[i] - b[i]);
  return sum / static_cast<double>(a.size());
}

double dtw(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) fail(ErrorCategory::kInvalidParameter, "dtw: empty series");
  const std::size_t m = b.size();
  std::vector<double> prev(m), cur(m);
  const auto cost = [](double x, double y) { return (x - y) * (x - y); };

  prev[0] = cost(a[0], b[0]);
  for (std::size_t j = 1; j < m; ++j) prev[j] = prev[j - 1] + cost(a[0], b[j]);
  for (std::size_t i = 1; i < a.size(); ++i) {
    cur[0] = prev[0] + cost(a[i], b[0]);
    for (std::size_t j = 1; j < m; ++j) {
      cur[j] = cost(a[i], b[j]) + std::min({prev[j], cur[j - 1], prev[j - 1]});
    }
    std::swap(prev, cur);
  }
  return std::sqrt(prev[m - 1]);
}

std::string_view to_string(PsdWindow window) {
  return window == PsdWindow::kNone ? "none" : "hann";
}

std::optional<PsdWindow> parse_psd_window(std::string_view name) {
  if (name == "none") return PsdWindow::kNone;
  if (name == "hann") return PsdWindow::kHann;
  return std::nullopt;
}

std::vector<double> periodogram(std::span<const double> x, PsdWindow window) {
  const std::size_t n = x.size();
  if (n == 0) fail(ErrorCategory::kInvalidParameter, "periodogram: empty series");
  std::vector<double> in(x.begin(), x.end());
  double scale = static_cast<double>(n);
  if (window == PsdWindow::kHann && n > 1) {
    constexpr double kTwoPi = 6.283185307179586;
    scale = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double w = 0.5 - 0.5 * std::cos(kTwoPi * static_cast<double>(i) / static_cast<double>(n - 1));
      in[i] *= w;
      scale += w * w;
    }
  }
  std::vector<std::complex<double>> spectrum(n / 2 + 1);
  fftw_execute_dft_r2c(plans().get(n), in.data(),
                       reinterpret_cast<fftw_complex*>(spectrum.data()));

  std::vector<double> power(spectrum.size());
  for (std::size_t k = 0; k < spectrum.size(); ++k) {
    const bool unpaired = k == 0 || (n % 2 == 0 && k == n / 2);
    power[k] = (unpaired ? 1.0 : 2.0) * std::norm(spectrum[k]) / scale;
  }
  return power;
}

double spectral_similarity(std::span<const double> reference, std::span<const double> other,
                           PsdWindow window) {
  require_same_length(reference, other, "spectral_similarity");
  if (reference.size() < 4) {
    fail(ErrorCategory::kInvalidParameter, "spectral_similarity needs at least 4 samples");
  }
  const std::vector<double> p_ref = periodogram(reference, window);
  const std::vector<double> p_other = periodogram(other, window);
  const double ref_norm = norm2(p_ref);
  if (!(ref_norm > 0.0)) {
    fail(ErrorCategory::kInvalidParameter,
         "spectral_similarity: reference spectrum is identically zero");
  }
  std::vector<double> diff(p_ref.size());
  for (std::size_t k = 0; k < diff.size(); ++k) diff[k] = p_ref[k] - p_other[k];
  return 1.0 - norm2(diff) / ref_norm;
}

std::string_view to_string(Pairing pairing) {
  return pairing == Pairing::kNearest ? "nearest" : "index";
}

std::optional<Pairing> parse_pairing(std::string_view name) {
  if (name == "nearest") return Pairing::kNearest;
  if (name == "index") return Pairing::kIndex;
  return std::nullopt;
}

MetricReport evaluate_sets(std::span<const Waveform> real, std::span<const Waveform> generated,
                           const EvalOptions& options) {
  if (real.empty() || generated.empty()) {
    fail(ErrorCategory::kInvalidParameter, "evaluate_sets: both sets must be nonempty");
  }
  if (options.per_class) {
    const auto unlabeled = [](const Waveform& w) { return !w.label.has_value(); };
    if (std::any_of(real.begin(), real.end(), unlabeled) ||
        std::any_of(generated.begin(), generated.end(), unlabeled)) {
      fail(ErrorCategory::kInvalidParameter,
           "per-class rows need labeled signals; disable per-class rows for unlabeled sets");
    }
  }

  const auto prepare = [&options](std::span<const Waveform> set) {
    std::vector<std::vector<double>> out;
    out.reserve(set.size());
    for (const Waveform& w : set) {
      out.push_back(options.zscore ? zscore(w.values) : w.values);
    }
    return out;
  };
  const auto real_values = prepare(real);
  const auto gen_values = prepare(generated);

  // Groups ordered by kind, then label (unlabeled last).
  const auto key_of = [&options](const Waveform& w) {
    const int label = options.per_class ? static_cast<int>(*w.label) : -1;
    return std::pair(static_cast<int>(w.kind), label);
  };
  std::map<std::pair<int, int>, Group> groups;
  for (std::size_t i = 0; i < generated.size(); ++i) {
    const auto key = key_of(generated[i]);
    auto [it, inserted] = groups.try_emplace(
        key, Group{generated[i].kind, options.per_class ? generated[i].label : std::nullopt, {}, {}});
    it->second.generated.push_back(i);
  }
  for (std::size_t i = 0; i < real.size(); ++i) {
    const auto it = groups.find(key_of(real[i]));
    if (it != groups.end()) it->second.real.push_back(i);
  }

  struct Job {
    std::size_t generated;
    std::size_t real;  // resolved for index pairing, otherwise filled by the worker
    const Group* group;
  };
  std::vector<Job> jobs;
  for (const auto& [key, group] : groups) {
    const std::string name = std::string(to_string(group.kind)) + "/" +
                             (group.label ? std::string(to_string(*group.label)) : "all");
    if (group.real.empty()) {
      fail(ErrorCategory::kInvalidParameter, "evaluate_sets: no real signals for " + name);
    }
    if (options.pairing == Pairing::kIndex && group.real.size() != group.generated.size()) {
      fail(ErrorCategory::kInvalidParameter,
           "index pairing needs equal set sizes for " + name + " (" +
               std::to_string(group.real.size()) + " real vs " +
               std::to_string(group.generated.size()) + " generated)");
    }
    for (std::size_t k = 0; k < group.generated.size(); ++k) {
      const std::size_t partner = options.pairing == Pairing::kIndex ? group.real[k] : 0;
      jobs.push_back({group.generated[k], partner, &group});
    }
  }

  std::vector<Scored> scored(jobs.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  const auto work = [&] {
    for (std::size_t j = next++; j < jobs.size(); j = next++) {
      try {
        const Job& job = jobs[j];
        const auto& g = gen_values[job.generated];
        std::size_t partner = job.real;
        if (options.pairing == Pairing::kNearest) {
          double best = std::numeric_limits<double>::infinity();
          for (std::size_t r : job.group->real) {
            const double d = mae(real_values[r], g);
            if (d < best) {
              best = d;
              partner = r;
            }
          }
        }
        const auto& r = real_values[partner];
        scored[j] = {job.generated, mae(r, g), dtw(r, g), spectral_similarity(r, g, options.window)};
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  std::size_t n_workers = options.workers != 0 ? options.workers
                                               : std::max(1u, std::thread::hardware_concurrency());
  n_workers = std::min(n_workers, jobs.size());
  if (n_workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < n_workers; ++w) pool.emplace_back(work);
  }
  if (error) std::rethrow_exception(error);

  MetricReport report;
  report.pairing = options.pairing;
  report.zscored = options.zscore;
  report.window = options.window;
  report.real_count = real.size();
  report.generated_count = generated.size();

  std::size_t j = 0;
  auto it = groups.begin();
  while (it != groups.end()) {
    const SignalKind kind = it->second.kind;
    MetricRow overall{kind, std::nullopt, 0, 0.0, 0.0, 0.0};
    for (; it != groups.end() && it->second.kind == kind; ++it) {
      MetricRow row{kind, it->second.label, it->second.generated.size(), 0.0, 0.0, 0.0};
      for (std::size_t k = 0; k < row.count; ++k, ++j) {
        row.mae += scored[j].mae;
        row.dtw += scored[j].dtw;
        row.ss += scored[j].ss;
      }
      const double n = static_cast<double>(row.count);
      row.mae /= n;
      row.dtw /= n;
      row.ss /= n;
      overall.count += row.count;
      overall.mae += n * row.mae;
      overall.dtw += n * row.dtw;
      overall.ss += n * row.ss;
      if (options.per_class) report.rows.push_back(row);
    }
    const double n = static_cast<double>(overall.count);
    overall.mae /= n;
    overall.dtw /= n;
    overall.ss /= n;
    report.rows.push_back(overall);
  }
  return report;
}

std::string format_report(const MetricReport& report) {
  std::string out = "# pairing=" + std::string(to_string(report.pairing)) +
                    " normalization=" + (report.zscored ? "zscore" : "raw") +
                    " window=" + std::string(to_string(report.window)) +
                    " real=" + std::to_string(report.real_count) +
                    " generated=" + std::to_string(report.generated_count) + "\n";
  char line[160];
  std::snprintf(line, sizeof line, "%-9s %-20s %7s %12s %12s %12s\n", "kind", "class", "n", "MAE",
                "DTW", "SS");
  out += line;
  for (const MetricRow& row : report.rows) {
    std::snprintf(line, sizeof line, "%-9s %-20s %7zu %12.6f %12.6f %12.6f\n",
                  std::string(to_string(row.kind)).c_str(), class_name(row).c_str(), row.count,
                  row.mae, row.dtw, row.ss);
    out += line;
  }
  return out;
}

nlohmann::ordered_json report_to_json(const MetricReport& report) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const MetricRow& row : report.rows) {
    rows.push_back({{"kind", to_string(row.kind)},
                    {"class", class_name(row)},
                    {"count", row.count},
                    {"mae", row.mae},
                    {"dtw", row.dtw},
                    {"ss", row.ss}});
  }
  nlohmann::ordered_json doc = {{"pairing", to_string(report.pairing)},
                                {"normalization", report.zscored ? "zscore" : "raw"},
                                {"window", to_string(report.window)},
                                {"real_count", report.real_count},
                                {"generated_count", report.generated_count},
                                {"rows", rows}};
  return doc;
}

}  // namespace vdlv
