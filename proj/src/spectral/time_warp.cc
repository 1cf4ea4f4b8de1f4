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

#include "perturbbench/spectral/time_warp.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "perturbbench/error.h"

namespace perturbbench {
namespace {

double wrap_phase(double x) {
  return x - 2.0 * std::numbers::pi * std::round(x / (2.0 * std::numbers::pi));
}

}  // namespace

AudioSignal time_warp(const AudioSignal& signal, double factor,
                      const WarpOptions& options) {
  if (!(factor > 0.0) || !std::isfinite(factor)) {
    throw ParameterError("warp factor must be positive and finite");
  }
  if (factor == 1.0 || signal.empty()) return signal;

  const StftConfig config =
      options.config.value_or(StftConfig::for_rate(signal.sample_rate()));
  const Spectrogram spec = stft(signal, config);
  const Matrix<double> mag = spec.magnitude();
  const Matrix<double> phase = spec.phase();
  const std::size_t n_in = spec.n_frames();
  const std::size_t bins = spec.n_bins();

  const auto out_len = std::max<std::size_t>(
      1, static_cast<std::size_t>(std::llround(signal.size() / factor)));
  const std::size_t n_out = config.frame_count(out_len);

  Matrix<double> out_mag(n_out, bins);
  Matrix<double> out_phase(n_out, bins);
  const double hop = static_cast<double>(config.hop_samples);
  for (std::size_t m = 0; m < n_out; ++m) {
    const double pos = std::min(m * factor, static_cast<double>(n_in - 1));
    const auto i0 = static_cast<std::size_t>(pos);
    const std::size_t i1 = std::min(i0 + 1, n_in - 1);
    const double a = pos - static_cast<double>(i0);
    for (std::size_t k = 0; k < bins; ++k) {
      out_mag(m, k) = (1.0 - a) * mag(i0, k) + a * mag(i1, k);
      if (m == 0) {
        out_phase(m, k) = phase(i0, k);
        continue;
      }
      const double omega = 2.0 * std::numbers::pi * k * hop / config.fft_size;
      double advance = omega;
      if (i1 != i0) {
        advance += wrap_phase(phase(i1, k) - phase(i0, k) - omega);
      }
      out_phase(m, k) = wrap_phase(out_phase(m - 1, k) + advance);
    }
  }

  return griffin_lim(out_mag, out_phase, options.iterations, config,
                     signal.sample_rate(), out_len)
      .signal;
}

}  // namespace perturbbench
