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

// Acceptance gate: one PASS/FAIL line per primary criterion, each with its
// wall-clock budget. Exit status is nonzero when any criterion fails.

#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles/oracles.hpp"
#include "vdlv/dataset.hpp"
#include "vdlv/metrics.hpp"
#include "vdlv/model.hpp"
#include "vdlv/morphology.hpp"
#include "vdlv/normalize.hpp"
#include "vdlv/presets.hpp"

namespace {

using namespace vdlv;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      if (ok) detail = what;
      ok = false;
    }
  }
};

int failures = 0;

void criterion(const char* name, double budget_s, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out.ok = false;
    out.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (budget_s > 0 && secs >= budget_s) {
    out.require(false, "over budget");
  }
  char budget[48] = "no budget";
  if (budget_s > 0) std::snprintf(budget, sizeof budget, "budget %g s", budget_s);
  char line[512];
  std::snprintf(line, sizeof line, "%s  %-22s %8.3f s (%s)%s%s", out.ok ? "PASS" : "FAIL", name, secs, budget,
                out.detail.empty() ? "" : "  ", out.detail.c_str());
  std::puts(line);
  std::fflush(stdout);
  if (!out.ok) ++failures;
}

std::string fmt(const char* f, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

BreathReference reference_for(const PressureParams& p, const SamplingGrid& g) {
  return {p.cp, p.breath.pulse.amplitude, 1.0 / (p.theta * g.dt)};
}

Outcome pulse_bound() {
  Outcome out;
  std::mt19937_64 rng(20261019);
  std::uniform_real_distribution<double> log_alpha(-3.0, 4.0), beta(-3.0, 3.0),
      phi(-2.0 * std::numbers::pi, 2.0 * std::numbers::pi), theta(0.05, 3.0);
  const SamplingGrid grid;
  std::size_t checked = 0;
  for (int k = 0; k < 10000; ++k) {
    const PulseShape s{std::pow(10.0, log_alpha(rng)), beta(rng), phi(rng)};
    for (double v : rect_pulse(s, theta(rng), grid)) {
      if (!(v > 0.0 && v < 1.0)) out.require(false, fmt("value %.17g outside (0,1) at alpha %g", v, s.alpha));
      ++checked;
    }
  }
  out.detail += out.ok ? std::to_string(checked) + " samples" : "";
  return out;
}

Outcome amplitude() {
  Outcome out;
  const auto p = std::get<PressureParams>(nominal_params(VdType::kNormal, SignalKind::kPressure));
  out.require(p.cp == 3.0, "nominal CP is not 3");
  const auto w = pressure_waveform(p, {});
  const double peak = *std::max_element(w.values.begin(), w.values.end());
  const double low = *std::min_element(w.values.begin(), w.values.end());
  out.require(peak >= 25.2 && peak <= 26.2, fmt("peak %.6f", peak));
  out.require(low >= 3.0 - 1e-9, fmt("minimum %.12f", low));
  if (out.ok) out.detail = fmt("peak %.4f min %.12f", peak, low);
  return out;
}

Outcome morphology() {
  Outcome out;
  const SamplingGrid grid;
  const auto breaths = [&](VdType t) {
    const auto p = std::get<PressureParams>(nominal_params(t, SignalKind::kPressure));
    const auto w = pressure_waveform(p, grid);
    return analyze_breaths(w.values, reference_for(p, grid));
  };
  const auto check = [&](VdType t, const std::function<bool(const BreathFeatures&)>& pred, const char* what) {
    const auto bs = breaths(t);
    out.require(bs.size() >= 3, std::string(to_string(t)) + ": fewer than 3 complete breaths");
    for (const auto& b : bs) {
      out.require(pred(b), std::string(to_string(t)) + ": " + what + " fails in breath at sample " +
                               std::to_string(b.begin));
    }
  };
  check(VdType::kNormal, [](const BreathFeatures& b) { return b.peaks == 1; }, "1 peak/breath");
  check(VdType::kNormal,
        [](const BreathFeatures& b) {
          return !b.mid_inspiratory_concavity && !b.end_inspiratory_bump && !b.post_inspiratory_deformation;
        },
        "negative control (no deformation features)");
  check(VdType::kDoubleTrigger, [](const BreathFeatures& b) { return b.peaks == 2; }, "2 peaks/breath");
  check(VdType::kAutoTrigger, [](const BreathFeatures& b) { return b.peaks == 2; }, "2 peaks/breath");
  check(VdType::kDelayedCycling, [](const BreathFeatures& b) { return b.end_inspiratory_bump; },
        "end-inspiratory bump");
  check(VdType::kEarlyCycling, [](const BreathFeatures& b) { return b.post_inspiratory_deformation; },
        "post-inspiratory deformation");
  check(VdType::kFlowLimited, [](const BreathFeatures& b) { return b.mid_inspiratory_concavity; },
        "mid-inspiratory concavity");
  const auto it = pressure_waveform(
      std::get<PressureParams>(nominal_params(VdType::kIneffectiveTrigger, SignalKind::kPressure)), grid);
  out.require(is_flat(it.values, 3.0, 0.0), "ineffective trigger is not flat at CP");
  return out;
}

Outcome volume() {
  Outcome out;
  const SamplingGrid grid;
  const auto normal = evaluate(nominal_params(VdType::kNormal, SignalKind::kVolume), grid);
  const double peak = *std::max_element(normal.values.begin(), normal.values.end());
  out.require(peak >= 495.0 && peak <= 505.0, fmt("normal peak %.4f", peak));

  const auto v = std::get<VolumeParams>(nominal_params(VdType::kAutoTrigger, SignalKind::kVolume));
  const auto w = volume_waveform(v, grid);
  const auto g = rect_pulse(v.breath.pulse.shape(), v.theta, grid);
  std::size_t off = 0, on = 0;
  for (std::size_t i = 1; i < g.size() && !on; ++i) {
    if (!off && g[i - 1] > 0.5 && g[i] <= 0.5) off = i;
    else if (off && g[i - 1] <= 0.5 && g[i] > 0.5) on = i;
  }
  out.require(on > off, "no complete expiratory window");
  const double a = v.breath.pulse.amplitude;
  const auto peaks = find_peaks(w.values, 0.5 * a, 0.05 * a);
  const bool inside = std::any_of(peaks.begin(), peaks.end(), [&](std::size_t p) { return p >= off && p < on; });
  out.require(inside, "auto-trigger second peak not inside the first expiratory window");
  if (out.ok) {
    out.detail = fmt("normal peak %.4f, expiratory window [", peak) + std::to_string(off) + ", " +
                 std::to_string(on) + ")";
  }
  return out;
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("vdlv_acceptance_" + std::to_string(::getpid()));
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

Outcome dataset_protocol(const fs::path& root, double& slowest) {
  Outcome out;
  DatasetSpec spec;  // default classes, 1000 per class, default grid
  spec.master_seed = 13;
  const auto timed = [&](const fs::path& dir, std::size_t workers) {
    const auto t0 = Clock::now();
    const Manifest m = generate_dataset(spec, dir, PresetTable::builtin(), workers);
    slowest = std::max(slowest, std::chrono::duration<double>(Clock::now() - t0).count());
    return m;
  };
  const Manifest a = timed(root / "run1", 1);
  const Manifest b = timed(root / "run2", 1);
  const Manifest c = timed(root / "run8", 8);
  std::size_t pressure = 0, volume = 0;
  for (const auto& f : a.files) (f.cls.second == SignalKind::kPressure ? pressure : volume) += f.count;
  out.require(pressure == 6000 && volume == 3000,
              "class totals " + std::to_string(pressure) + "+" + std::to_string(volume));
  out.require(a.total_records() == 9000, "record count");
  out.require(a.digest == b.digest && a.digest == c.digest, "manifest digests differ");
  for (const auto& f : a.files) {
    const std::string bytes = slurp(root / "run1" / f.path);
    out.require(bytes == slurp(root / "run2" / f.path), f.path + " differs between runs");
    out.require(bytes == slurp(root / "run8" / f.path), f.path + " differs between 1 and 8 workers");
  }
  out.require(slurp(root / "run1" / "manifest.json") == slurp(root / "run8" / "manifest.json"), "manifests differ");
  out.require(load_dataset(root / "run1").records.size() == 9000, "reload count");
  if (out.ok) out.detail = fmt("slowest run %.2f s, digest ", slowest) + a.digest.substr(0, 16);
  return out;
}

Outcome metric_identities() {
  Outcome out;
  DatasetSpec spec;
  spec.master_seed = 5;
  for (std::size_t k = 0; k < 100; ++k) {
    const Record r = make_record(spec, PresetTable::builtin(), k % spec.classes.size(), k);
    for (const auto& x : {r.values, zscore(r.values)}) {
      out.require(mae(x, x) == 0.0, r.id + ": mae(x,x) != 0");
      out.require(dtw(x, x) == 0.0, r.id + ": dtw(x,x) != 0");
      out.require(spectral_similarity(x, x) == 1.0, r.id + ": SS(x,x) != 1");
    }
  }
  std::vector<std::vector<double>> all;
  for (std::size_t len = 1; len <= 6; ++len) {
    std::size_t count = 1;
    for (std::size_t i = 0; i < len; ++i) count *= 3;
    for (std::size_t code = 0; code < count; ++code) {
      std::vector<double> v(len);
      std::size_t c = code;
      for (double& x : v) {
        x = static_cast<double>(c % 3);
        c /= 3;
      }
      all.push_back(std::move(v));
    }
  }
  std::size_t pairs = 0;
  for (const auto& a : all) {
    for (const auto& b : all) {
      const double fast = dtw(a, b), slow = oracle::brute_force_dtw_bounded(a, b);
      if (fast != slow) {
        out.require(false, fmt("dtw %.17g vs exhaustive %.17g", fast, slow));
        return out;
      }
      ++pairs;
    }
  }
  if (out.ok) out.detail = std::to_string(pairs) + " exhaustive pairs";
  return out;
}

Outcome dtw_bounds() {
  Outcome out;
  out.require(dtw(std::vector<double>{0, 0}, std::vector<double>{0, 1}) == 1.0, "dtw([0,0],[0,1]) != 1");
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> len(1, 300);
  std::normal_distribution<double> d(0.0, 3.0);
  for (int k = 0; k < 1000; ++k) {
    const std::size_t n = len(rng);
    std::vector<double> a(n), b(n);
    for (auto& x : a) x = d(rng);
    for (auto& x : b) x = d(rng);
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) sum += (a[i] - b[i]) * (a[i] - b[i]);
    const double euclid = std::sqrt(sum);
    const double warped = dtw(a, b);
    if (!(warped <= euclid)) out.require(false, fmt("dtw %.17g > euclid %.17g", warped, euclid));
  }
  return out;
}

Outcome zscore_contract(const fs::path& dataset) {
  Outcome out;
  const Dataset ds = load_dataset(dataset);
  double worst_mean = 0.0, worst_std = 0.0;
  for (const Record& r : ds.records) {
    const auto z = zscore(r.values);
    long double s = 0;
    for (double v : z) s += v;
    const long double mean = s / z.size();
    long double ss = 0;
    for (double v : z) ss += (v - mean) * (v - mean);
    const double sd = static_cast<double>(std::sqrt(ss / z.size()));
    worst_mean = std::max(worst_mean, static_cast<double>(std::fabs(mean)));
    worst_std = std::max(worst_std, std::fabs(sd - 1.0));
  }
  out.require(ds.records.size() == 9000, "dataset not available");
  out.require(worst_mean <= 1e-9, fmt("|mean| up to %.3g", worst_mean));
  out.require(worst_std <= 1e-9, fmt("|std-1| up to %.3g", worst_std));
  if (out.ok) out.detail = fmt("worst |mean| %.2g, worst |std-1| %.2g", worst_mean, worst_std);
  return out;
}

}  // namespace

int main() {
  TempDir tmp;
  criterion("pulse-bound", 5.0, pulse_bound);
  criterion("amplitude-calibration", 1.0, amplitude);
  criterion("morphology", 2.0, morphology);
  criterion("volume-fixtures", 1.0, volume);
  // 60 s applies to each default-spec generation; three runs are made.
  double slowest = 0.0;
  criterion("dataset-protocol", 0.0, [&] {
    Outcome o = dataset_protocol(tmp.path, slowest);
    o.require(slowest < 60.0, fmt("a generation run took %.1f s", slowest));
    return o;
  });
  criterion("metric-identities", 30.0, metric_identities);
  criterion("dtw-bounds", 0.0, dtw_bounds);
  criterion("zscore-contract", 0.0, [&] { return zscore_contract(tmp.path / "run1"); });
  std::printf("%d of 8 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
