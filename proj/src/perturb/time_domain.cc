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

#include "perturbbench/perturb/time_domain.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "perturbbench/error.h"
#include "perturbbench/signal/noise.h"
#include "perturbbench/spectral/time_warp.h"

namespace perturbbench {

AudioSignal reverse_local(const AudioSignal& signal, double window_ms,
                          double fade_ms) {
  const WindowPlan plan(window_ms, fade_ms);
  auto frames = segment(signal, plan.window_ms());
  for (auto& f : frames) std::reverse(f.begin(), f.end());
  return join_with_fades(frames, plan.fade_ms(), signal.sample_rate());
}

AudioSignal shuffle_local(const AudioSignal& signal, double window_ms,
                          std::uint64_t seed, double fade_ms) {
  const WindowPlan plan(window_ms, fade_ms);
  auto frames = segment(signal, plan.window_ms());
  std::mt19937_64 rng(seed);
  for (auto& f : frames) std::shuffle(f.begin(), f.end(), rng);
  return join_with_fades(frames, plan.fade_ms(), signal.sample_rate());
}

std::vector<bool> select_frames(std::size_t n_frames, double fraction,
                                FrameSelection selection, std::uint64_t seed) {
  if (!(fraction >= 0.0 && fraction <= 1.0)) {
    throw ParameterError("fraction must be in [0, 1]");
  }
  std::vector<bool> chosen(n_frames, false);
  if (selection == FrameSelection::kPeriodic) {
    // Frame j is chosen when the running quota floor((j + 1) * fraction)
    // steps up, so selected frames never bunch together.
    for (std::size_t j = 0; j < n_frames; ++j) {
      chosen[j] = std::floor((j + 1) * fraction) > std::floor(j * fraction);
    }
  } else {
    const auto k = static_cast<std::size_t>(std::llround(fraction * n_frames));
    std::vector<std::size_t> order(n_frames);
    std::iota(order.begin(), order.end(), 0);
    std::mt19937_64 rng(seed);
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t j = 0; j < k; ++j) chosen[order[j]] = true;
  }
  return chosen;
}

AudioSignal interrupt(const AudioSignal& signal, const InterruptOptions& options) {
  if (!(options.window_ms > 0.0)) throw ParameterError("window_ms must be positive");
  const std::size_t window = ms_to_samples(options.window_ms, signal.sample_rate());
  const std::size_t n_frames = (signal.size() + window - 1) / window;
  const auto chosen =
      select_frames(n_frames, options.fraction, options.selection, options.seed);

  std::vector<double> out = signal.vector();
  std::vector<std::size_t> masked;
  for (std::size_t j = 0; j < n_frames; ++j) {
    if (!chosen[j]) continue;
    const std::size_t stop = std::min(out.size(), (j + 1) * window);
    for (std::size_t i = j * window; i < stop; ++i) masked.push_back(i);
  }
  if (masked.empty()) return AudioSignal(std::move(out), signal.sample_rate());

  if (options.mode == InterruptMode::kSilence) {
    for (std::size_t i : masked) out[i] = 0.0;
  } else {
    const double target =
        mean_power(signal.samples()) / std::pow(10.0, options.snr_db / 10.0);
    auto noise = gaussian_noise(masked.size(), substream_seed(options.seed, 1));
    const double actual = mean_power(noise);
    const double gain = actual > 0.0 ? std::sqrt(target / actual) : 0.0;
    for (std::size_t j = 0; j < masked.size(); ++j) {
      out[masked[j]] += gain * noise[j];
    }
  }
  return AudioSignal(std::move(out), signal.sample_rate());
}

AudioSignal repackage(const AudioSignal& signal, double window_ms,
                      double compression, double silence_ms, double fade_ms) {
  if (!(compression > 1.0) || !std::isfinite(compression)) {
    throw ParameterError("repackage compression must be > 1");
  }
  if (!(silence_ms >= 0.0)) throw ParameterError("silence_ms must be >= 0");
  const WindowPlan plan(window_ms, fade_ms);
  const int rate = signal.sample_rate();
  const std::size_t gap =
      silence_ms == 0.0 ? 0 : ms_to_samples(silence_ms, rate);

  const std::size_t window = plan.window_samples(rate);

  std::vector<Frame> pieces;
  for (auto& frame : segment(signal, plan.window_ms())) {
    // A short final frame gets proportionally less silence, keeping the
    // audio:silence ratio of every frame the same.
    const std::size_t frame_gap =
        frame.size() == window
            ? gap
            : static_cast<std::size_t>(std::llround(
                  static_cast<double>(gap) * frame.size() / window));
    pieces.push_back(
        time_warp(AudioSignal(std::move(frame), rate), compression).vector());
    if (frame_gap > 0) pieces.emplace_back(frame_gap, 0.0);
  }
  return join_with_fades(pieces, plan.fade_ms(), rate);
}

}  // namespace perturbbench
