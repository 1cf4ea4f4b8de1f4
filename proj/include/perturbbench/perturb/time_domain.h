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

#ifndef PERTURBBENCH_PERTURB_TIME_DOMAIN_H_
#define PERTURBBENCH_PERTURB_TIME_DOMAIN_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "perturbbench/signal/audio.h"
#include "perturbbench/signal/windowing.h"

namespace perturbbench {

// Reverses the samples of every window_ms frame in place. Length preserving;
// with fade_ms == 0 applying it twice is the identity.
AudioSignal reverse_local(const AudioSignal& signal, double window_ms,
                          double fade_ms = kDefaultFadeMs);

// Permutes the samples of every frame with an independent draw from a
// generator seeded by `seed`. Each frame keeps its sample multiset when
// fade_ms == 0.
AudioSignal shuffle_local(const AudioSignal& signal, double window_ms,
                          std::uint64_t seed, double fade_ms = kDefaultFadeMs);

enum class InterruptMode { kMask, kSilence };
enum class FrameSelection { kPeriodic, kRandom };

struct InterruptOptions {
  double window_ms = 300.0;
  double fraction = 0.5;
  InterruptMode mode = InterruptMode::kSilence;
  // Ratio of whole-utterance mean power to the noise power, mask mode only.
  double snr_db = 0.0;
  FrameSelection selection = FrameSelection::kPeriodic;
  std::uint64_t seed = 0;
};

// Periodic selection takes floor(fraction * n_frames) evenly spaced frames
// (every other frame at 0.5, starting with the second). Random selection
// draws round(fraction * n_frames) frames without replacement from `seed`. Throws ParameterError unless 0 <= fraction <= 1.
std::vector<bool> select_frames(std::size_t n_frames, double fraction,
                                FrameSelection selection, std::uint64_t seed);

// Silences, or adds Gaussian noise to, the selected frames. In mask mode the
// noise is scaled so that its power over the masked samples is exactly
// mean_power(signal) / 10^(snr_db / 10). Length preserving.
AudioSignal interrupt(const AudioSignal& signal, const InterruptOptions& options);

// Each frame is time-compressed by `compression` (pitch preserved) and
// followed by silence_ms of zeros (scaled down in proportion for a short
// final frame); the pieces are joined with fades.
// Throws ParameterError unless compression > 1 and silence_ms >= 0.
AudioSignal repackage(const AudioSignal& signal, double window_ms,
                      double compression, double silence_ms,
                      double fade_ms = kDefaultFadeMs);

}  // namespace perturbbench

#endif  // PERTURBBENCH_PERTURB_TIME_DOMAIN_H_
