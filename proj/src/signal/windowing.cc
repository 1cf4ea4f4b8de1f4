// Copyright 2026 The perturbbench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "perturbbench/signal/windowing.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "perturbbench/error.h"

namespace perturbbench {

WindowPlan::WindowPlan(double window_ms, double fade_ms)
    : window_ms_(window_ms), fade_ms_(fade_ms) {
  if (!(window_ms_ > 0.0) || !std::isfinite(window_ms_)) {
    throw ParameterError("window_ms must be positive");
  }
  if (!(fade_ms_ >= 0.0) || !std::isfinite(fade_ms_)) {
    throw ParameterError("fade_ms must be non-negative");
  }
  fade_ms_ = std::min(fade_ms_, window_ms_ / 2.0);
}

std::size_t WindowPlan::window_samples(int sample_rate) const {
  return ms_to_samples(window_ms_, sample_rate);
}

std::size_t ms_to_samples(double ms, int sample_rate) {
  if (!(ms >= 0.0) || !std::isfinite(ms)) {
    throw ParameterError("duration must be a non-negative finite number");
  }
  const double n = std::round(ms * sample_rate / 1000.0);
  return std::max<std::size_t>(1, static_cast<std::size_t>(n));
}

std::vector<Frame> segment_samples(std::span<const double> samples,
                                   std::size_t window) {
  if (window == 0) throw ParameterError("window must hold at least one sample");
  std::vector<Frame> frames;
  frames.reserve((samples.size() + window - 1) / window);
  for (std::size_t start = 0; start < samples.size(); start += window) {
    const std::size_t len = std::min(window, samples.size() - start);
    const auto part = samples.subspan(start, len);
    frames.emplace_back(part.begin(), part.end());
  }
  return frames;
}

std::vector<Frame> segment(const AudioSignal& signal, double window_ms) {
  if (!(window_ms > 0.0)) throw ParameterError("window_ms must be positive");
  return segment_samples(signal.samples(),
                         ms_to_samples(window_ms, signal.sample_rate()));
}

void apply_fade(std::span<double> frame, std::size_t fade) {
  fade = std::min(fade, frame.size() / 2);
  const std::size_t n = frame.size();
  for (std::size_t j = 0; j < fade; ++j) {
    const double s = std::sin(0.5 * std::numbers::pi * (j + 0.5) / fade);
    const double gain = s * s;
    frame[j] *= gain;
    frame[n - 1 - j] *= gain;
  }
}

AudioSignal join_with_fades(std::span<const Frame> frames, double fade_ms,
                            int sample_rate) {
  if (!(fade_ms >= 0.0)) throw ParameterError("fade_ms must be non-negative");
  std::size_t total = 0;
  for (const auto& f : frames) total += f.size();
  std::vector<double> out;
  out.reserve(total);
  const std::size_t fade =
      fade_ms == 0.0
          ? 0
          : static_cast<std::size_t>(std::round(fade_ms * sample_rate / 1000.0));
  for (const auto& f : frames) {
    const std::size_t start = out.size();
    out.insert(out.end(), f.begin(), f.end());
    if (fade > 0) apply_fade(std::span<double>(out).subspan(start), fade);
  }
  return AudioSignal(std::move(out), sample_rate);
}

}  // namespace perturbbench
