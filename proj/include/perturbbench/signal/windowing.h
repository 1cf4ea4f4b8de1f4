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

#ifndef PERTURBBENCH_SIGNAL_WINDOWING_H_
#define PERTURBBENCH_SIGNAL_WINDOWING_H_

#include <cstddef>
#include <span>
#include <vector>

#include "perturbbench/signal/audio.h"

namespace perturbbench {

using Frame = std::vector<double>;

constexpr double kDefaultFadeMs = 2.0;

// Rectangular analysis window plus the raised-cosine fade applied when the
// transformed frames are joined again. fade_ms is clamped to window_ms / 2.
class WindowPlan {
 public:
  WindowPlan(double window_ms, double fade_ms = kDefaultFadeMs);

  double window_ms() const { return window_ms_; }
  double fade_ms() const { return fade_ms_; }
  std::size_t window_samples(int sample_rate) const;

 private:
  double window_ms_;
  double fade_ms_;
};

// round(ms * rate / 1000), never less than one sample.
std::size_t ms_to_samples(double ms, int sample_rate);

// Cuts the signal into consecutive non-overlapping frames of
// ms_to_samples(window_ms) samples. The last frame keeps the remainder and
// may be shorter. An empty signal yields no frames.
std::vector<Frame> segment(const AudioSignal& signal, double window_ms);

// Same, with the window given in samples.
std::vector<Frame> segment_samples(std::span<const double> samples,
                                   std::size_t window);

// Concatenates frames after ramping each frame's first and last fade samples
// in place with a raised cosine. Output length is the sum of frame lengths;
// fade_ms == 0 is a plain concatenation.
AudioSignal join_with_fades(std::span<const Frame> frames, double fade_ms,
                            int sample_rate);

// In-place head and tail ramp of `fade` samples (clamped to half the frame).
void apply_fade(std::span<double> frame, std::size_t fade);

}  // namespace perturbbench

#endif  // PERTURBBENCH_SIGNAL_WINDOWING_H_
