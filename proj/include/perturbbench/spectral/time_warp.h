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

#ifndef PERTURBBENCH_SPECTRAL_TIME_WARP_H_
#define PERTURBBENCH_SPECTRAL_TIME_WARP_H_

#include <optional>

#include "perturbbench/signal/audio.h"
#include "perturbbench/spectral/griffin_lim.h"
#include "perturbbench/spectral/stft.h"

namespace perturbbench {

struct WarpOptions {
  // Defaults to StftConfig::for_rate(signal rate).
  std::optional<StftConfig> config;
  int iterations = kDefaultGriffinLimIterations;
};

// Pitch-preserving time-scale modification. factor > 1 compresses (output
// lasts duration / factor), factor < 1 stretches; exactly 1.0 returns the
// input unchanged.
//
// Frame magnitudes are linearly interpolated along time at the source
// position m * factor of each output frame. The start phase follows the
// source's per-bin phase advance (phase-vocoder propagation) and is then
// refined with Griffin-Lim. Output length is round(len / factor), at least 1.
//
// Throws ParameterError unless factor is finite and > 0.
AudioSignal time_warp(const AudioSignal& signal, double factor,
                      const WarpOptions& options = {});

}  // namespace perturbbench

#endif  // PERTURBBENCH_SPECTRAL_TIME_WARP_H_
