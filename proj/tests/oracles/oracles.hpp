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

#ifndef VDLV_TESTS_ORACLES_HPP_
#define VDLV_TESTS_ORACLES_HPP_

// Slow, independent reference implementations used as test oracles. None of
// these share code with the library.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

namespace vdlv::oracle {

// Exhaustive DTW: enumerates every monotone path from (0,0) to (n-1,m-1) by
// recursion and returns sqrt of the cheapest summed squared cost.
inline void dtw_paths(const std::vector<double>& a, const std::vector<double>& b, std::size_t i,
                      std::size_t j, double acc, double& best) {
  acc += (a[i] - b[j]) * (a[i] - b[j]);
  if (i + 1 == a.size() && j + 1 == b.size()) {
    if (acc < best) best = acc;
    return;
  }
  if (i + 1 < a.size()) dtw_paths(a, b, i + 1, j, acc, best);
  if (j + 1 < b.size()) dtw_paths(a, b, i, j + 1, acc, best);
  if (i + 1 < a.size() && j + 1 < b.size()) dtw_paths(a, b, i + 1, j + 1, acc, best);
}

inline double brute_force_dtw(const std::vector<double>& a, const std::vector<double>& b) {
  double best = std::numeric_limits<double>::infinity();
  dtw_paths(a, b, 0, 0, 0.0, best);
  return std::sqrt(best);
}

// Same enumeration with branch-and-bound: a partial path already costing at
// least the best complete path is abandoned (costs are non-negative, so it
// cannot win). Diagonal steps are tried first to find a good bound early.
inline void dtw_paths_bounded(const std::vector<double>& a, const std::vector<double>& b,
                              std::size_t i, std::size_t j, double acc, double& best) {
  acc += (a[i] - b[j]) * (a[i] - b[j]);
  if (acc >= best) return;
  if (i + 1 == a.size() && j + 1 == b.size()) {
    best = acc;
    return;
  }
  if (i + 1 < a.size() && j + 1 < b.size()) dtw_paths_bounded(a, b, i + 1, j + 1, acc, best);
  if (i + 1 < a.size()) dtw_paths_bounded(a, b, i + 1, j, acc, best);
  if (j + 1 < b.size()) dtw_paths_bounded(a, b, i, j + 1, acc, best);
}

inline double brute_force_dtw_bounded(const std::vector<double>& a, const std::vector<double>& b) {
  double best = std::numeric_limits<double>::infinity();
  dtw_paths_bounded(a, b, 0, 0, 0.0, best);
  return std::sqrt(best);
}

// O(n^2) DFT periodogram in long double, one-sided, interior bins doubled.
inline std::vector<double> naive_periodogram(const std::vector<double>& x) {
  const std::size_t n = x.size();
  std::vector<double> p(n / 2 + 1);
  for (std::size_t k = 0; k <= n / 2; ++k) {
    long double re = 0, im = 0;
    for (std::size_t t = 0; t < n; ++t) {
      const long double ang = -2.0L * std::numbers::pi_v<long double> *
                              static_cast<long double>((k * t) % n) / static_cast<long double>(n);
      re += x[t] * std::cos(ang);
      im += x[t] * std::sin(ang);
    }
    const bool unpaired = k == 0 || (n % 2 == 0 && k == n / 2);
    p[k] = static_cast<double>((unpaired ? 1 : 2) * (re * re + im * im) / n);
  }
  return p;
}

inline double naive_ss(const std::vector<double>& x, const std::vector<double>& y) {
  const auto px = naive_periodogram(x), py = naive_periodogram(y);
  long double num = 0, den = 0;
  for (std::size_t k = 0; k < px.size(); ++k) {
    num += (long double)(px[k] - py[k]) * (px[k] - py[k]);
    den += (long double)px[k] * px[k];
  }
  return static_cast<double>(1.0L - std::sqrt(num) / std::sqrt(den));
}

// Direct transcription of the model equations in long double: tanh pulse,
// recursion seeded at zero, each limb divided by the raw recursion maximum.
struct RefPulse {
  double alpha = 1, beta = 0, phi = 0, amp = 0;
};

inline std::vector<long double> ref_pulse(const RefPulse& p, double theta, double t0, double dt,
                                          std::size_t n) {
  std::vector<long double> g(n);
  for (std::size_t i = 0; i < n; ++i) {
    const long double t = t0 + static_cast<long double>(i) * dt;
    g[i] = 0.5L * (std::tanh(p.alpha * (std::sin(2 * std::numbers::pi_v<long double> * theta * t -
                                                 p.phi) - p.beta)) + 1);
  }
  return g;
}

inline std::vector<long double> ref_limb(const std::vector<long double>& g, double gamma,
                                         bool rising) {
  std::vector<long double> r(g.size());
  long double prev = 0, peak = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    r[i] = i == 0 ? 0 : g[i] / gamma + (1 - 1.0L / gamma) * prev;
    prev = r[i];
    peak = std::max(peak, r[i]);
  }
  for (std::size_t i = 0; i < g.size(); ++i) {
    r[i] = peak > 0 ? r[i] * (rising ? g[i] : 1 - g[i]) / peak : 0;
  }
  return r;
}

inline std::vector<double> ref_waveform(double theta, double cp, const RefPulse& breath,
                                        double gamma_rise, double gamma_fall,
                                        const std::vector<RefPulse>& deformations, double t0,
                                        double dt, std::size_t n) {
  std::vector<long double> y(n, cp);
  if (breath.amp != 0 && breath.beta < 1) {
    const auto g = ref_pulse(breath, theta, t0, dt, n);
    const auto up = ref_limb(g, gamma_rise, true);
    const auto down = ref_limb(g, gamma_fall, false);
    for (std::size_t i = 0; i < n; ++i) y[i] += breath.amp * (up[i] + down[i]);
  }
  for (const RefPulse& d : deformations) {
    if (d.amp == 0 || d.beta >= 1) continue;
    const auto g = ref_pulse(d, theta, t0, dt, n);
    long double peak = 0;
    for (auto v : g) peak = std::max(peak, v);
    for (std::size_t i = 0; i < n; ++i) y[i] += d.amp * g[i] / peak;
  }
  return {y.begin(), y.end()};
}

}  // namespace vdlv::oracle

#endif  // VDLV_TESTS_ORACLES_HPP_
