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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles/oracles.hpp"
#include "test_util.hpp"
#include "vdlv/presets.hpp"

namespace vdlv {
namespace {

using testing::category_of;
using Vec = std::vector<double>;

Vec random_series(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> d;
  Vec v(n);
  for (double& x : v) x = d(rng);
  return v;
}

Vec tone(std::size_t n, std::size_t bin, double amp = 1.0) {
  Vec v(n);
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = amp * std::sin(2.0 * std::numbers::pi * static_cast<double>(bin * i) / static_cast<double>(n));
  }
  return v;
}

double euclid(const Vec& a, const Vec& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

// -- mae ----------------------------------------------------------------------

TEST(Mae, Examples) {
  const Vec a = {0.3, -1.0, 2.0};
  EXPECT_EQ(mae(a, a), 0.0);
  EXPECT_EQ(mae(Vec{0, 0, 0, 0}, Vec{1, 1, 1, 1}), 1.0);
  EXPECT_EQ(mae(Vec{0, 2}, Vec{1, 5}), 2.0);
  EXPECT_EQ(category_of([] { mae(Vec{1, 2}, Vec{1}); }), ErrorCategory::kInvalidParameter);
}

TEST(MaeProperty, SymmetricAndTriangle) {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 500; ++t) {
    const auto a = random_series(rng, 50), b = random_series(rng, 50), c = random_series(rng, 50);
    EXPECT_EQ(mae(a, b), mae(b, a));
    EXPECT_LE(mae(a, c), mae(a, b) + mae(b, c) + 1e-12);
    EXPECT_GT(mae(a, b), 0.0);
  }
}

// -- dtw ----------------------------------------------------------------------

TEST(Dtw, Examples) {
  EXPECT_EQ(dtw(Vec{0, 0}, Vec{0, 1}), 1.0);
  EXPECT_EQ(dtw(Vec{0, 1, 2}, Vec{0, 2}), 1.0);
  const Vec x = {1.5, -2.0, 3.25, 0.0};
  EXPECT_EQ(dtw(x, x), 0.0);
  EXPECT_EQ(dtw(Vec{3.0}, Vec{1.0, 1.0}), std::sqrt(8.0));
  EXPECT_EQ(category_of([] { dtw(Vec{}, Vec{1.0}); }), ErrorCategory::kInvalidParameter);
}

TEST(DtwProperty, EqualsExhaustivePathSearch) {
  // Every pair of series over {0,1,2} with lengths 1..4.
  std::vector<Vec> all;
  for (std::size_t len = 1; len <= 4; ++len) {
    const std::size_t count = static_cast<std::size_t>(std::pow(3, len));
    for (std::size_t code = 0; code < count; ++code) {
      Vec v(len);
      std::size_t c = code;
      for (double& x : v) {
        x = static_cast<double>(c % 3);
        c /= 3;
      }
      all.push_back(v);
    }
  }
  for (const Vec& a : all) {
    for (const Vec& b : all) ASSERT_EQ(dtw(a, b), oracle::brute_force_dtw(a, b));
  }
}

TEST(DtwProperty, RandomRealsMatchOracleSymmetricAndDiagonalBound) {
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<std::size_t> len(1, 7);
  for (int t = 0; t < 300; ++t) {
    const auto a = random_series(rng, len(rng)), b = random_series(rng, len(rng));
    EXPECT_NEAR(dtw(a, b), oracle::brute_force_dtw(a, b), 1e-12);
    EXPECT_NEAR(dtw(a, b), dtw(b, a), 1e-12);
  }
  for (int t = 0; t < 300; ++t) {
    const auto a = random_series(rng, 64), b = random_series(rng, 64);
    EXPECT_LE(dtw(a, b), euclid(a, b));
    EXPECT_GE(dtw(a, b), 0.0);
  }
}

// -- periodogram / spectral similarity ----------------------------------------

TEST(Periodogram, MatchesNaiveDft) {
  std::mt19937_64 rng(3);
  for (std::size_t n : {1u, 2u, 3u, 4u, 7u, 16u, 97u, 128u, 1201u}) {
    const auto x = random_series(rng, n);
    const auto p = periodogram(x);
    const auto q = oracle::naive_periodogram(x);
    ASSERT_EQ(p.size(), n / 2 + 1);
    double scale = 0.0;
    for (double v : q) scale = std::max(scale, v);
    for (std::size_t k = 0; k < p.size(); ++k) ASSERT_NEAR(p[k], q[k], 1e-9 * (1.0 + scale)) << n << " " << k;
  }
}

TEST(Periodogram, ParsevalHolds) {
  std::mt19937_64 rng(4);
  for (std::size_t n : {64u, 65u, 1201u}) {
    const auto x = random_series(rng, n);
    double energy = 0.0;
    for (double v : x) energy += v * v;
    double total = 0.0;
    for (double v : periodogram(x)) total += v;
    EXPECT_NEAR(total, energy, 1e-9 * energy);
  }
}

TEST(Periodogram, HannWindowMatchesWindowedNaiveDft) {
  std::mt19937_64 rng(5);
  const std::size_t n = 200;
  const auto x = random_series(rng, n);
  Vec xw(n);
  double sw = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double w = 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * static_cast<double>(i) / (n - 1));
    xw[i] = x[i] * w;
    sw += w * w;
  }
  const auto p = periodogram(x, PsdWindow::kHann);
  const auto q = oracle::naive_periodogram(xw);
  for (std::size_t k = 0; k < p.size(); ++k) EXPECT_NEAR(p[k], q[k] * n / sw, 1e-9);
  EXPECT_EQ(parse_psd_window("hann"), PsdWindow::kHann);
  EXPECT_FALSE(parse_psd_window("blackman"));
}

TEST(SpectralSimilarity, Examples) {
  std::mt19937_64 rng(6);
  const auto x = random_series(rng, 256);
  Vec neg(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) neg[i] = -x[i];
  EXPECT_EQ(spectral_similarity(x, x), 1.0);
  EXPECT_NEAR(spectral_similarity(x, neg), 1.0, 1e-12);

  const std::size_t n = 256;
  EXPECT_NEAR(spectral_similarity(tone(n, 5), tone(n, 17)), 1.0 - std::sqrt(2.0), 1e-9);
  EXPECT_NEAR(spectral_similarity(tone(n, 5), tone(n, 5, 2.0)), -2.0, 1e-9);
  EXPECT_NEAR(spectral_similarity(tone(n, 5), tone(n, 5, 2.0)), oracle::naive_ss(tone(n, 5), tone(n, 5, 2.0)), 1e-9);
}

TEST(SpectralSimilarity, Errors) {
  EXPECT_EQ(category_of([] { spectral_similarity(Vec(8, 0.0), Vec(8, 1.0)); }), ErrorCategory::kInvalidParameter);
  EXPECT_EQ(category_of([] { spectral_similarity(Vec{1, 2, 3}, Vec{1, 2, 3}); }), ErrorCategory::kInvalidParameter);
  EXPECT_EQ(category_of([] { spectral_similarity(Vec{1, 2, 3, 4}, Vec{1, 2, 3, 4, 5}); }),
            ErrorCategory::kInvalidParameter);
}

TEST(SpectralSimilarityProperty, AtMostOneAndMatchesOracle) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    const auto a = random_series(rng, 4 + t), b = random_series(rng, 4 + t);
    const double ss = spectral_similarity(a, b);
    EXPECT_LE(ss, 1.0);
    EXPECT_NEAR(ss, oracle::naive_ss(a, b), 1e-9);
  }
}

// -- evaluate_sets --------------------------------------------------------------

std::vector<Waveform> nominal_and_sampled(std::uint64_t seed, std::size_t per_class) {
  std::mt19937_64 rng(seed);
  std::vector<Waveform> out;
  const ClassKey classes[] = {{VdType::kNormal, SignalKind::kPressure},
                              {VdType::kDoubleTrigger, SignalKind::kPressure},
                              {VdType::kAutoTrigger, SignalKind::kVolume}};
  for (const auto& [type, kind] : classes) {
    for (std::size_t i = 0; i < per_class; ++i) {
      Waveform w = evaluate(sample_params(type, kind, rng), {});
      w.label = type;
      out.push_back(std::move(w));
    }
  }
  return out;
}

TEST(EvaluateSets, IdenticalSetsUnderIndexPairing) {
  const auto s = nominal_and_sampled(1, 4);
  EvalOptions opts;
  opts.pairing = Pairing::kIndex;
  const auto rep = evaluate_sets(s, s, opts);
  ASSERT_EQ(rep.rows.size(), 5u);  // 2 pressure classes + overall, 1 volume class + overall
  for (const MetricRow& row : rep.rows) {
    EXPECT_EQ(row.mae, 0.0);
    EXPECT_EQ(row.dtw, 0.0);
    EXPECT_EQ(row.ss, 1.0);
  }
  EXPECT_EQ(rep.rows[2].count, 8u);
  EXPECT_FALSE(rep.rows[2].label);
  EXPECT_EQ(rep.rows[3].kind, SignalKind::kVolume);
}

TEST(EvaluateSets, ShiftIsAbsorbedByDtw) {
  const auto base = evaluate(nominal_params(VdType::kNormal, SignalKind::kPressure), {});
  Waveform shifted = base;
  std::copy(base.values.begin(), base.values.end() - 2, shifted.values.begin() + 2);
  std::vector<Waveform> real = {base}, gen = {shifted};
  EvalOptions opts;
  opts.per_class = false;
  const auto rep = evaluate_sets(real, gen, opts);
  ASSERT_EQ(rep.rows.size(), 1u);
  const auto& row = rep.rows[0];
  const double n = static_cast<double>(base.values.size());
  EXPECT_GT(row.mae, 0.0);
  // Per-sample DTW cost is far below the per-sample shift error.
  EXPECT_LT(row.dtw / n, 0.1 * row.mae);
  EXPECT_LT(row.dtw, 0.25 * row.mae * std::sqrt(n));
}

TEST(EvaluateSets, NearestPicksMinimalMaePartner) {
  std::mt19937_64 rng(8);
  std::vector<Waveform> real, gen;
  for (int i = 0; i < 6; ++i) {
    Waveform w = evaluate(sample_params(VdType::kNormal, SignalKind::kPressure, rng), {});
    w.label = VdType::kNormal;
    real.push_back(w);
  }
  gen = {real[4]};
  EvalOptions opts;
  opts.zscore = false;
  const auto rep = evaluate_sets(real, gen, opts);
  EXPECT_EQ(rep.rows[0].mae, 0.0);
  EXPECT_EQ(rep.rows[0].ss, 1.0);
  EXPECT_FALSE(rep.zscored);
}

TEST(EvaluateSets, KindsNeverCrossPair) {
  // A volume signal must not be matched to pressure data even if closer.
  Waveform p = evaluate(nominal_params(VdType::kNormal, SignalKind::kPressure), {});
  Waveform v = evaluate(nominal_params(VdType::kNormal, SignalKind::kVolume), {});
  p.label = v.label = VdType::kNormal;
  Waveform v_as_p = v;
  v_as_p.kind = SignalKind::kPressure;
  std::vector<Waveform> real = {v_as_p, v}, gen = {p};
  const auto rep = evaluate_sets(real, gen);
  ASSERT_EQ(rep.rows.size(), 2u);
  EXPECT_GT(rep.rows[0].mae, 0.0);  // paired with the relabeled volume, the only pressure signal

  std::vector<Waveform> real_only_volume = {v};
  EXPECT_EQ(category_of([&] { evaluate_sets(real_only_volume, gen); }), ErrorCategory::kInvalidParameter);
}

TEST(EvaluateSets, OverallIsCountWeightedMean) {
  const auto real = nominal_and_sampled(2, 5);
  auto gen = nominal_and_sampled(3, 5);
  gen.erase(gen.begin() + 7, gen.begin() + 10);  // 5 normal, 2 double trigger pressure
  const auto rep = evaluate_sets(real, gen);
  ASSERT_GE(rep.rows.size(), 3u);
  const auto& a = rep.rows[0];
  const auto& b = rep.rows[1];
  const auto& all = rep.rows[2];
  EXPECT_EQ(a.count, 5u);
  EXPECT_EQ(b.count, 2u);
  EXPECT_EQ(all.count, 7u);
  EXPECT_NEAR(all.mae, (5 * a.mae + 2 * b.mae) / 7, 1e-12);
  EXPECT_NEAR(all.dtw, (5 * a.dtw + 2 * b.dtw) / 7, 1e-12);
  EXPECT_NEAR(all.ss, (5 * a.ss + 2 * b.ss) / 7, 1e-12);
}

TEST(EvaluateSets, WorkerCountDoesNotChangeReport) {
  const auto real = nominal_and_sampled(4, 4);
  const auto gen = nominal_and_sampled(5, 4);
  EvalOptions one, many;
  one.workers = 1;
  many.workers = 6;
  EXPECT_EQ(format_report(evaluate_sets(real, gen, one)), format_report(evaluate_sets(real, gen, many)));
}

TEST(EvaluateSets, Errors) {
  const auto s = nominal_and_sampled(6, 2);
  std::vector<Waveform> shorter(s.begin(), s.end() - 1);
  EvalOptions index;
  index.pairing = Pairing::kIndex;
  EXPECT_EQ(category_of([&] { evaluate_sets(s, shorter, index); }), ErrorCategory::kInvalidParameter);
  std::vector<Waveform> unlabeled = s;
  unlabeled[0].label.reset();
  EXPECT_EQ(category_of([&] { evaluate_sets(s, unlabeled); }), ErrorCategory::kInvalidParameter);
  EvalOptions pooled;
  pooled.per_class = false;
  EXPECT_NO_THROW(evaluate_sets(s, unlabeled, pooled));
  EXPECT_EQ(category_of([&] { evaluate_sets({}, s); }), ErrorCategory::kInvalidParameter);
}

TEST(EvaluateSets, TextAndJsonLayout) {
  const auto s = nominal_and_sampled(7, 2);
  EvalOptions opts;
  opts.pairing = Pairing::kIndex;
  const auto rep = evaluate_sets(s, s, opts);
  const std::string text = format_report(rep);
  EXPECT_EQ(text.substr(0, text.find('\n')), "# pairing=index normalization=zscore window=none real=6 generated=6");
  EXPECT_NE(text.find("pressure  double_trigger             2     0.000000     0.000000     1.000000"),
            std::string::npos)
      << text;
  const auto j = report_to_json(rep);
  EXPECT_EQ(j["pairing"], "index");
  EXPECT_EQ(j["rows"].size(), rep.rows.size());
  EXPECT_EQ(j["rows"][2]["class"], "overall");
  EXPECT_EQ(j.begin().key(), "pairing");
}

}  // namespace
}  // namespace vdlv
