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

#ifndef VDLV_MODEL_HPP_
#define VDLV_MODEL_HPP_

// Parametric pressure/volume model built from smoothed periodic rectangular
// pulses.
//
//   P(t) = breath(t) + onset_deformation(t) + late_deformation(t) + CP
//   V(t) = breath(t) + deformation(t)
//
// Every term is driven by a pulse g(t) = 1/2 {tanh(alpha (sin(2 pi theta t - phi)
// - beta)) + 1}. The breath term low-pass filters its pulse twice, once for the
// inspiratory limb (gated by g) and once for the expiratory limb (gated by
// 1 - g); the deformation terms are the pulse normalized to unit peak. All
// maxima are taken over the whole sampled window.

#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "vdlv/grid.hpp"
#include "vdlv/vd_type.hpp"

namespace vdlv {

// Pulse shape without amplitude. alpha is the edge steepness, beta the
// duty-cycle threshold on the sine and phi the phase offset in radians.
struct PulseShape {
  double alpha = 1.0;
  double beta = 0.0;
  double phi = 0.0;
};

struct PulseParams {
  double alpha = 1.0;
  double beta = 0.0;
  double phi = 0.0;
  double amplitude = 0.0;

  PulseShape shape() const { return {alpha, beta, phi}; }

  // beta >= 1 never fires; amplitude 0 contributes nothing.
  bool inert() const { return amplitude == 0.0 || beta >= 1.0; }

  friend bool operator==(const PulseParams&, const PulseParams&) = default;
};

// Recursion coefficients of the inspiratory (rise) and expiratory (fall)
// limbs; 1/gamma is the filter gain, so gamma >= 1.
struct SmoothingParams {
  double gamma_rise = 1.0;
  double gamma_fall = 1.0;

  friend bool operator==(const SmoothingParams&, const SmoothingParams&) = default;
};

struct BreathComponent {
  PulseParams pulse;
  SmoothingParams smoothing;

  friend bool operator==(const BreathComponent&, const BreathComponent&) = default;
};

struct PressureParams {
  double theta = 0.3;  // breaths per second
  double cp = 0.0;     // constant baseline pressure (PEEP), cmH2O
  BreathComponent breath;
  PulseParams onset_deformation;  // deformation at the start of / during inspiration
  PulseParams late_deformation;   // deformation at end of inspiration / in expiration

  void validate() const;

  friend bool operator==(const PressureParams&, const PressureParams&) = default;
};

struct VolumeParams {
  double theta = 0.3;
  BreathComponent breath;
  PulseParams deformation;

  void validate() const;

  friend bool operator==(const VolumeParams&, const VolumeParams&) = default;
};

using ModelParams = std::variant<PressureParams, VolumeParams>;

SignalKind kind_of(const ModelParams& params);

struct Waveform {
  SamplingGrid grid;
  std::vector<double> values;
  SignalKind kind = SignalKind::kPressure;
  std::optional<VdType> label;
};

// g(t_i) for every grid point. Values are kept strictly inside (0, 1): the
// logistic form is evaluated and rounded toward the open interval where a
// double would otherwise saturate to exactly 0 or 1.
std::vector<double> rect_pulse(const PulseShape& shape, double theta,
                               const SamplingGrid& grid);

// First-order recursion r(0) = 0, r(i) = base(i)/gamma + (1 - 1/gamma) r(i-1),
// returned as r(i) * gate(i) / max_j r(j). Zero everywhere when r never leaves
// zero.
std::vector<double> smooth_gate(std::span<const double> base, double gamma,
                                std::span<const double> gate);

// Individual terms, exposed for tests and plotting.
std::vector<double> breath_term(const BreathComponent& component, double theta,
                                const SamplingGrid& grid);
std::vector<double> deformation_term(const PulseParams& pulse, double theta,
                                     const SamplingGrid& grid);

Waveform pressure_waveform(const PressureParams& params, const SamplingGrid& grid);
Waveform volume_waveform(const VolumeParams& params, const SamplingGrid& grid);
Waveform evaluate(const ModelParams& params, const SamplingGrid& grid);

}  // namespace vdlv

#endif  // VDLV_MODEL_HPP_
