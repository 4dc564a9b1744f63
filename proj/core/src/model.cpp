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

#include "vdlv/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "vdlv/error.hpp"

namespace vdlv {
namespace {

void require_finite(double value, const char* name) {
  if (!std::isfinite(value)) {
    fail(ErrorCategory::kInvalidParameter, std::string(name) + " must be finite");
  }
}

void validate_shape(const PulseShape& shape) {
  require_finite(shape.alpha, "alpha");
  require_finite(shape.beta, "beta");
  require_finite(shape.phi, "phi");
  if (shape.alpha <= 0.0) {
    fail(ErrorCategory::kInvalidParameter,
         "alpha must be positive (got " + std::to_string(shape.alpha) + ")");
  }
}

void validate_pulse(const PulseParams& pulse) {
  validate_shape(pulse.shape());
  require_finite(pulse.amplitude, "amplitude");
  if (pulse.amplitude < 0.0) {
    fail(ErrorCategory::kInvalidParameter,
         "amplitude must be non-negative (got " + std::to_string(pulse.amplitude) + ")");
  }
}

void validate_theta(double theta) {
  require_finite(theta, "theta");
  if (theta <= 0.0) {
    fail(ErrorCategory::kInvalidParameter,
         "theta must be positive (got " + std::to_string(theta) + ")");
  }
}

void validate_gamma(double gamma) {
  if (!std::isfinite(gamma) || gamma < 1.0) {
    fail(ErrorCategory::kInvalidParameter,
         "gamma must be >= 1 (got " + std::to_string(gamma) + ")");
  }
}

void validate_breath(const BreathComponent& breath) {
  validate_pulse(breath.pulse);
  validate_gamma(breath.smoothing.gamma_rise);
  validate_gamma(breath.smoothing.gamma_fall);
}

constexpr double kPulseFloor = std::numeric_limits<double>::denorm_min();
const double kPulseCeiling = std::nextafter(1.0, 0.0);

}  // namespace

void PressureParams::validate() const {
  validate_theta(theta);
  require_finite(cp, "cp");
  if (cp < 0.0) {
    fail(ErrorCategory::kInvalidParameter, "cp must be non-negative");
  }
  validate_breath(breath);
  validate_pulse(onset_deformation);
  validate_pulse(late_deformation);
}

void VolumeParams::validate() const {
  validate_theta(theta);
  validate_breath(breath);
  validate_pulse(deformation);
}

SignalKind kind_of(const ModelParams& params) {
  return std::holds_alternative<PressureParams>(params) ? SignalKind::kPressure
                                                        : SignalKind::kVolume;
}

std::vector<double> rect_pulse(const PulseShape& shape, double theta,
                               const SamplingGrid& grid) {
  grid.validate();
  validate_shape(shape);
  validate_theta(theta);

  const double omega = 2.0 * std::numbers::pi * theta;
  std::vector<double> out(grid.n);
  for (std::size_t i = 0; i < grid.n; ++i) {
    const double x = shape.alpha * (std::sin(omega * grid.time(i) - shape.phi) - shape.beta);
    // 1/2 (tanh(x) + 1) == 1 / (1 + exp(-2x))
    const double g = 1.0 / (1.0 + std::exp(-2.0 * x));
    out[i] = std::clamp(g, kPulseFloor, kPulseCeiling);
  }
  return out;
}

std::vector<double> smooth_gate(std::span<const double> base, double gamma,
                                std::span<const double> gate) {
  validate_gamma(gamma);
  if (base.size() != gate.size()) {
    fail(ErrorCategory::kInvalidParameter,
         "smooth_gate: base and gate lengths differ (" + std::to_string(base.size()) +
             " vs " + std::to_string(gate.size()) + ")");
  }
  std::vector<double> r(base.size(), 0.0);
  const double gain = 1.0 / gamma;
  for (std::size_t i = 1; i < base.size(); ++i) {
    r[i] = gain * base[i] + (1.0 - gain) * r[i - 1];
  }
  const double peak = r.empty() ? 0.0 : *std::max_element(r.begin(), r.end());
  if (!(peak > 0.0)) return std::vector<double>(base.size(), 0.0);

  for (std::size_t i = 0; i < r.size(); ++i) r[i] = r[i] * gate[i] / peak;
  return r;
}

std::vector<double> breath_term(const BreathComponent& component, double theta,
                                const SamplingGrid& grid) {
  validate_breath(component);
  if (component.pulse.inert()) return std::vector<double>(grid.n, 0.0);

  const std::vector<double> pulse = rect_pulse(component.pulse.shape(), theta, grid);
  std::vector<double> released(pulse.size());
  std::transform(pulse.begin(), pulse.end(), released.begin(),
                 [](double g) { return 1.0 - g; });

  const std::vector<double> inspiration =
      smooth_gate(pulse, component.smoothing.gamma_rise, pulse);
  const std::vector<double> expiration =
      smooth_gate(pulse, component.smoothing.gamma_fall, released);

  std::vector<double> out(grid.n);
  for (std::size_t i = 0; i < grid.n; ++i) {
    out[i] = component.pulse.amplitude * (inspiration[i] + expiration[i]);
  }
  return out;
}

std::vector<double> deformation_term(const PulseParams& pulse, double theta,
                                     const SamplingGrid& grid) {
  validate_pulse(pulse);
  if (pulse.inert()) return std::vector<double>(grid.n, 0.0);

  std::vector<double> g = rect_pulse(pulse.shape(), theta, grid);
  const double peak = *std::max_element(g.begin(), g.end());
  if (!(peak > 0.0)) return std::vector<double>(grid.n, 0.0);
  for (double& v : g) v = pulse.amplitude * (v / peak);
  return g;
}

Waveform pressure_waveform(const PressureParams& params, const SamplingGrid& grid) {
  grid.validate();
  params.validate();

  const auto breath = breath_term(params.breath, params.theta, grid);
  const auto onset = deformation_term(params.onset_deformation, params.theta, grid);
  const auto late = deformation_term(params.late_deformation, params.theta, grid);

  Waveform w{grid, std::vector<double>(grid.n), SignalKind::kPressure, std::nullopt};
  for (std::size_t i = 0; i < grid.n; ++i) {
    w.values[i] = breath[i] + onset[i] + late[i] + params.cp;
  }
  return w;
}

Waveform volume_waveform(const VolumeParams& params, const SamplingGrid& grid) {
  grid.validate();
  params.validate();

  const auto breath = breath_term(params.breath, params.theta, grid);
  const auto extra = deformation_term(params.deformation, params.theta, grid);

  Waveform w{grid, std::vector<double>(grid.n), SignalKind::kVolume, std::nullopt};
  for (std::size_t i = 0; i < grid.n; ++i) w.values[i] = breath[i] + extra[i];
  return w;
}

Waveform evaluate(const ModelParams& params, const SamplingGrid& grid) {
  return std::visit(
      [&grid](const auto& p) -> Waveform {
        if constexpr (std::is_same_v<std::decay_t<decltype(p)>, PressureParams>) {
          return pressure_waveform(p, grid);
        } else {
          return volume_waveform(p, grid);
        }
      },
      params);
}

}  // namespace vdlv
