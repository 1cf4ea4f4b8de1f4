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

#ifndef PERTURBBENCH_SPECTRAL_GRIFFIN_LIM_H_
#define PERTURBBENCH_SPECTRAL_GRIFFIN_LIM_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "perturbbench/signal/audio.h"
#include "perturbbench/spectral/matrix.h"
#include "perturbbench/spectral/stft.h"

namespace perturbbench {

constexpr int kDefaultGriffinLimIterations = 60;

struct GriffinLimResult {
  AudioSignal signal;
  // residuals[k] is the consistency residual || |STFT(x_k)| - magnitude ||
  // after k projections (k = 0 is the initial estimate). The norm weighs each
  // one-sided bin like its two-sided counterpart (DC and Nyquist once, every
  // other bin twice), which is the metric in which the iteration is a pair of
  // alternating projections and therefore non-increasing.
  std::vector<double> residuals;
};

// Classic alternating-projection phase reconstruction. The magnitude matrix
// is frames x (fft_size / 2 + 1) on the frame grid of `config` (see
// StftConfig::front_pad). Without init_phase the start phase is drawn
// uniformly from `seed`. The returned signal has output_len samples.
//
// Throws ParameterError for negative iterations, negative or non-finite
// magnitudes, or a phase matrix whose shape differs from the magnitude.
GriffinLimResult griffin_lim(const Matrix<double>& magnitude,
                             const std::optional<Matrix<double>>& init_phase,
                             int iterations, const StftConfig& config,
                             int sample_rate, std::size_t output_len,
                             std::uint64_t seed = 0);

}  // namespace perturbbench

#endif  // PERTURBBENCH_SPECTRAL_GRIFFIN_LIM_H_
