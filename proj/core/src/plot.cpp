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

#include "vdlv/plot.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "vdlv/error.hpp"

namespace vdlv {
namespace {

void append_shortest(std::string& out, double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  out.append(buf, res.ptr);
}

std::string fixed(double v, int digits) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string escape_xml(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string waveform_csv(const Waveform& waveform) {
  std::string out;
  out.reserve(waveform.values.size() * 28);
  for (std::size_t i = 0; i < waveform.values.size(); ++i) {
    append_shortest(out, waveform.grid.time(i));
    out += ',';
    append_shortest(out, waveform.values[i]);
    out += '\n';
  }
  return out;
}

std::string waveform_svg(const Waveform& waveform, const std::string& title) {
  constexpr double kWidth = 800, kHeight = 300;
  constexpr double kLeft = 60, kRight = 20, kTop = 36, kBottom = 40;
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;

  const auto& v = waveform.values;
  double lo = v.empty() ? 0.0 : *std::min_element(v.begin(), v.end());
  double hi = v.empty() ? 1.0 : *std::max_element(v.begin(), v.end());
  if (hi - lo < 1e-12) {
    lo -= 1.0;
    hi += 1.0;
  }
  const double t0 = waveform.grid.t0;
  const double t1 = waveform.grid.time(v.empty() ? 0 : v.size() - 1);
  const double t_span = t1 > t0 ? t1 - t0 : 1.0;
  const auto px = [&](double t) { return kLeft + (t - t0) / t_span * plot_w; };
  const auto py = [&](double y) { return kTop + (hi - y) / (hi - lo) * plot_h; };

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fixed(kWidth, 0) +
         "\" height=\"" + fixed(kHeight, 0) + "\" viewBox=\"0 0 " + fixed(kWidth, 0) + " " +
         fixed(kHeight, 0) + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out += "<text x=\"" + fixed(kWidth / 2, 1) + "\" y=\"22\" text-anchor=\"middle\" "
         "font-family=\"sans-serif\" font-size=\"14\">" + escape_xml(title) + "</text>\n";
  out += "<g stroke=\"black\" stroke-width=\"1\">\n";
  out += "<line x1=\"" + fixed(kLeft, 1) + "\" y1=\"" + fixed(kTop + plot_h, 1) + "\" x2=\"" +
         fixed(kLeft + plot_w, 1) + "\" y2=\"" + fixed(kTop + plot_h, 1) + "\"/>\n";
  out += "<line x1=\"" + fixed(kLeft, 1) + "\" y1=\"" + fixed(kTop, 1) + "\" x2=\"" +
         fixed(kLeft, 1) + "\" y2=\"" + fixed(kTop + plot_h, 1) + "\"/>\n";
  out += "</g>\n<g font-family=\"sans-serif\" font-size=\"10\">\n";
  for (int k = 0; k <= 4; ++k) {
    const double t = t0 + t_span * k / 4.0;
    const double y = lo + (hi - lo) * k / 4.0;
    out += "<text x=\"" + fixed(px(t), 1) + "\" y=\"" + fixed(kTop + plot_h + 14, 1) +
           "\" text-anchor=\"middle\">" + fixed(t, 2) + "</text>\n";
    out += "<text x=\"" + fixed(kLeft - 6, 1) + "\" y=\"" + fixed(py(y) + 3, 1) +
           "\" text-anchor=\"end\">" + fixed(y, 2) + "</text>\n";
  }
  out += "<text x=\"" + fixed(kLeft + plot_w / 2, 1) + "\" y=\"" + fixed(kHeight - 6, 1) +
         "\" text-anchor=\"middle\">t (s)</text>\n</g>\n";
  out += "<polyline fill=\"none\" stroke=\"#1f5fa8\" stroke-width=\"1.2\" points=\"";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += fixed(px(waveform.grid.time(i)), 2) + "," + fixed(py(v[i]), 2);
  }
  out += "\"/>\n</svg>\n";
  return out;
}

void write_text_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorCategory::kIo, "cannot write " + path.string());
  out << contents;
  if (!out) fail(ErrorCategory::kIo, "write failed for " + path.string());
}

}  // namespace vdlv
