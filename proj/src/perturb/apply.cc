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

#include "perturbbench/perturb/apply.h"

#include <cmath>

#include "perturbbench/cochlear/chimera.h"
#include "perturbbench/perturb/time_domain.h"
#include "perturbbench/signal/noise.h"
#include "perturbbench/spectral/time_warp.h"

namespace perturbbench {
namespace {

// Gaussian noise with the same mean power as `like`.
AudioSignal matched_noise(const AudioSignal& like, std::uint64_t seed) {
  auto noise = gaussian_noise(like.size(), seed);
  const double gain = std::sqrt(mean_power(like.samples()));
  for (auto& v : noise) v *= gain;
  return AudioSignal(std::move(noise), like.sample_rate());
}

}  // namespace

AudioSignal apply(const PerturbationSpec& spec, const AudioSignal& signal) {
  const std::uint64_t seed = spec.seed().value_or(0);
  switch (spec.kind()) {
    case PerturbationKind::kNone:
      return signal;
    case PerturbationKind::kReverse:
      return reverse_local(signal, spec.number("window_ms"),
                           spec.number("fade_ms"));
    case PerturbationKind::kShuffle:
      return shuffle_local(signal, spec.number("window_ms"), seed,
                           spec.number("fade_ms"));
    case PerturbationKind::kWarp:
      return time_warp(signal, spec.number("factor"));
    case PerturbationKind::kChimera: {
      const AudioSignal noise = matched_noise(signal, seed);
      const int bands = spec.integer("n_bands");
      return spec.text("mode") == "speech_env"
                 ? chimerize(signal, noise, bands)
                 : chimerize(noise, signal, bands);
    }
    case PerturbationKind::kMosaic:
      return mosaicize(signal, spec.integer("n_bands"),
                       spec.integer("freq_win_bands"), spec.number("window_ms"),
                       seed);
    case PerturbationKind::kInterrupt: {
      InterruptOptions opt;
      opt.window_ms = spec.number("window_ms");
      opt.fraction = spec.number("fraction");
      opt.mode = spec.text("mode") == "mask" ? InterruptMode::kMask
                                             : InterruptMode::kSilence;
      if (spec.has("snr_db")) opt.snr_db = spec.number("snr_db");
      opt.selection = spec.text("selection") == "random"
                          ? FrameSelection::kRandom
                          : FrameSelection::kPeriodic;
      opt.seed = seed;
      return interrupt(signal, opt);
    }
    case PerturbationKind::kRepackage:
      return repackage(signal, spec.number("window_ms"), spec.number("factor"),
                       spec.number("silence_ms"), spec.number("fade_ms"));
    case PerturbationKind::kEnvelopeReverse:
      return reverse_envelopes(signal, spec.integer("n_bands"),
                               spec.number("window_ms"));
  }
  return signal;
}

}  // namespace perturbbench
