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

#ifndef PERTURBBENCH_SPECTRAL_STFT_H_
#define PERTURBBENCH_SPECTRAL_STFT_H_

#include <cstddef>
#include <span>
#include <vector>

#include "perturbbench/signal/audio.h"
#include "perturbbench/spectral/fft.h"
#include "perturbbench/spectral/matrix.h"

namespace perturbbench {

// Analysis geometry. The analysis window is a periodic Hann of win_samples,
// zero-padded to fft_size. Invariants (checked by validate()):
//   0 < hop_samples <= win_samples <= fft_size,
//   win_samples is a multiple of hop_samples with at least 2x overlap, which
//   makes the periodic Hann window overlap-add to a constant.
struct StftConfig {
  std::size_t win_samples = 512;
  std::size_t hop_samples = 128;
  std::size_t fft_size = 512;

  // 32 ms window, 8 ms hop, fft_size the next power of two. The window is
  // rounded to a whole number of hops.
  static StftConfig for_rate(int sample_rate, double win_ms = 32.0,
                             double hop_ms = 8.0);

  void validate() const;

  std::size_t bins() const { return fft_size / 2 + 1; }
  // Zeros prepended before the first frame so every sample sees the same
  // number of overlapping windows.
  std::size_t front_pad() const { return win_samples - hop_samples; }
  // ceil((len + front_pad) / hop).
  std::size_t frame_count(std::size_t signal_len) const;
  // Length of the padded buffer spanned by n frames.
  std::size_t buffer_length(std::size_t n_frames) const;

  friend bool operator==(const StftConfig&, const StftConfig&) = default;
};

std::vector<double> hann_window(std::size_t n);

class Spectrogram {
 public:
  Spectrogram(Matrix<Complex> frames, StftConfig config, int sample_rate,
              std::size_t original_len);

  const Matrix<Complex>& frames() const { return frames_; }
  const StftConfig& config() const { return config_; }
  int sample_rate() const { return sample_rate_; }
  std::size_t original_len() const { return original_len_; }
  std::size_t n_frames() const { return frames_.rows(); }
  std::size_t n_bins() const { return frames_.cols(); }

  Matrix<double> magnitude() const;
  Matrix<double> phase() const;

 private:
  Matrix<Complex> frames_;
  StftConfig config_;
  int sample_rate_;
  std::size_t original_len_;
};

// Throws ParameterError on an empty signal, ConfigError on a bad config.
Spectrogram stft(const AudioSignal& signal, const StftConfig& config);

// Least-squares overlap-add inverse (window-weighted, normalized by the summed
// squared window), truncated to original_len.
AudioSignal istft(const Spectrogram& spec);

namespace detail {

// Frames of an already padded buffer; buffer.size() must equal
// config.buffer_length(n_frames) for some n_frames >= 1.
Matrix<Complex> analyze_buffer(std::span<const double> buffer,
                               const StftConfig& config);

// Least-squares signal in the padded-buffer domain for the given frames. This
// is the orthogonal projection used by Griffin-Lim.
std::vector<double> synthesize_buffer(const Matrix<Complex>& frames,
                                      const StftConfig& config);

}  // namespace detail

}  // namespace perturbbench

#endif  // PERTURBBENCH_SPECTRAL_STFT_H_
