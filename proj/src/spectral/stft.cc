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

#include "perturbbench/spectral/stft.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "perturbbench/error.h"
#include "perturbbench/signal/windowing.h"

namespace perturbbench {

StftConfig StftConfig::for_rate(int sample_rate, double win_ms, double hop_ms) {
  StftConfig c;
  c.hop_samples = ms_to_samples(hop_ms, sample_rate);
  // Window rounded to a whole number of hops so overlap-add stays exact at
  // rates where the two durations do not both land on integer samples.
  const auto ratio = std::max<long long>(1, std::llround(win_ms / hop_ms));
  c.win_samples = c.hop_samples * static_cast<std::size_t>(ratio);
  c.fft_size = next_pow2(c.win_samples);
  c.validate();
  return c;
}

void StftConfig::validate() const {
  if (hop_samples == 0 || win_samples == 0 || fft_size == 0) {
    throw ConfigError("STFT sizes must be positive");
  }
  if (hop_samples > win_samples || win_samples > fft_size) {
    throw ConfigError("STFT requires hop <= window <= fft_size (hop " +
                      std::to_string(hop_samples) + ", window " +
                      std::to_string(win_samples) + ", fft " +
                      std::to_string(fft_size) + ")");
  }
  if (win_samples % hop_samples != 0 || win_samples / hop_samples < 2) {
    throw ConfigError(
        "Hann overlap-add needs window = k * hop with integer k >= 2");
  }
}

std::size_t StftConfig::frame_count(std::size_t signal_len) const {
  return (signal_len + front_pad() + hop_samples - 1) / hop_samples;
}

std::size_t StftConfig::buffer_length(std::size_t n_frames) const {
  return n_frames == 0 ? 0 : (n_frames - 1) * hop_samples + win_samples;
}

std::vector<double> hann_window(std::size_t n) {
  std::vector<double> w(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double s = std::sin(std::numbers::pi * i / n);
    w[i] = s * s;
  }
  return w;
}

Spectrogram::Spectrogram(Matrix<Complex> frames, StftConfig config,
                         int sample_rate, std::size_t original_len)
    : frames_(std::move(frames)),
      config_(config),
      sample_rate_(sample_rate),
      original_len_(original_len) {
  config_.validate();
  if (frames_.cols() != config_.bins()) {
    throw ParameterError("spectrogram has " + std::to_string(frames_.cols()) +
                         " bins, expected " + std::to_string(config_.bins()));
  }
  for (const auto& v : frames_.data()) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw ParameterError("spectrogram contains non-finite entries");
    }
  }
}

Matrix<double> Spectrogram::magnitude() const {
  Matrix<double> m(frames_.rows(), frames_.cols());
  for (std::size_t i = 0; i < m.data().size(); ++i) {
    m.data()[i] = std::abs(frames_.data()[i]);
  }
  return m;
}

Matrix<double> Spectrogram::phase() const {
  Matrix<double> m(frames_.rows(), frames_.cols());
  for (std::size_t i = 0; i < m.data().size(); ++i) {
    m.data()[i] = std::arg(frames_.data()[i]);
  }
  return m;
}

namespace detail {

Matrix<Complex> analyze_buffer(std::span<const double> buffer,
                               const StftConfig& config) {
  const std::size_t win = config.win_samples, hop = config.hop_samples;
  if (buffer.size() < win || (buffer.size() - win) % hop != 0) {
    throw ParameterError("buffer length does not match the frame grid");
  }
  const std::size_t n_frames = (buffer.size() - win) / hop + 1;
  const auto window = hann_window(win);
  const RealFft fft(config.fft_size);
  Matrix<Complex> frames(n_frames, config.bins());
  std::vector<double> scratch(config.fft_size, 0.0);
  for (std::size_t t = 0; t < n_frames; ++t) {
    const double* src = buffer.data() + t * hop;
    for (std::size_t i = 0; i < win; ++i) scratch[i] = src[i] * window[i];
    fft.forward(scratch, frames.row(t));
  }
  return frames;
}

std::vector<double> synthesize_buffer(const Matrix<Complex>& frames,
                                      const StftConfig& config) {
  const std::size_t win = config.win_samples, hop = config.hop_samples;
  const std::size_t n_frames = frames.rows();
  std::vector<double> out(config.buffer_length(n_frames), 0.0);
  std::vector<double> norm(out.size(), 0.0);
  const auto window = hann_window(win);
  const RealFft fft(config.fft_size);
  std::vector<double> scratch(config.fft_size);
  for (std::size_t t = 0; t < n_frames; ++t) {
    fft.inverse(frames.row(t), scratch);
    double* dst = out.data() + t * hop;
    double* nrm = norm.data() + t * hop;
    for (std::size_t i = 0; i < win; ++i) {
      dst[i] += scratch[i] * window[i];
      nrm[i] += window[i] * window[i];
    }
  }
  // Only the first sample of the buffer (periodic Hann zero) can be
  // uncovered; it is padding.
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = norm[i] > 1e-12 ? out[i] / norm[i] : 0.0;
  }
  return out;
}

}  // namespace detail

Spectrogram stft(const AudioSignal& signal, const StftConfig& config) {
  config.validate();
  if (signal.empty()) throw ParameterError("stft of an empty signal");
  const std::size_t n_frames = config.frame_count(signal.size());
  std::vector<double> buffer(config.buffer_length(n_frames), 0.0);
  std::copy(signal.samples().begin(), signal.samples().end(),
            buffer.begin() + static_cast<std::ptrdiff_t>(config.front_pad()));
  return Spectrogram(detail::analyze_buffer(buffer, config), config,
                     signal.sample_rate(), signal.size());
}

AudioSignal istft(const Spectrogram& spec) {
  const auto buffer = detail::synthesize_buffer(spec.frames(), spec.config());
  const std::size_t pad = spec.config().front_pad();
  std::vector<double> out(spec.original_len(), 0.0);
  for (std::size_t i = 0; i < out.size() && pad + i < buffer.size(); ++i) {
    out[i] = buffer[pad + i];
  }
  return AudioSignal(std::move(out), spec.sample_rate());
}

}  // namespace perturbbench
