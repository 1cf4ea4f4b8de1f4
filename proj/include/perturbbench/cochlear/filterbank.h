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

#ifndef PERTURBBENCH_COCHLEAR_FILTERBANK_H_
#define PERTURBBENCH_COCHLEAR_FILTERBANK_H_

#include <cstddef>
#include <span>
#include <vector>

#include "perturbbench/signal/audio.h"
#include "perturbbench/spectral/fft.h"

namespace perturbbench {

constexpr double kFilterbankLowHz = 80.0;
constexpr double kFilterbankHighHz = 8000.0;

// Glasberg & Moore equivalent rectangular bandwidth, in Hz.
double erb_bandwidth_hz(double freq_hz);
// ERB-rate (number of ERBs below freq_hz).
double erb_rate(double freq_hz);
double erb_rate_to_hz(double rate);

// n_bands centre frequencies equally spaced on the ERB-rate scale over
// [80 Hz, min(8000 Hz, 0.95 * Nyquist)]. A single band sits at the midpoint.
std::vector<double> erb_center_frequencies(int n_bands, int sample_rate);

// Zero-phase 4th-order gammatone bank applied in the frequency domain.
//
// Band k has the squared gammatone magnitude response
//   P_k(f) = [1 + ((f - fc_k) / b_k)^2]^-4   (+ the mirrored image term),
// which is what forward-backward filtering with the gammatone yields, with
// b_k = 1.019 * ERB(fc_k) widened by the band spacing (in ERBs) when the bank
// is sparser than one band per ERB. The responses are divided by
// max(sum_j P_j(f), floor) so they sum to one across the covered range and
// roll off outside it; the floor is half the smallest summed response inside
// the range.
class ErbFilterbank {
 public:
  ErbFilterbank(int n_bands, int sample_rate, std::size_t fft_size);

  int n_bands() const { return static_cast<int>(center_freqs_.size()); }
  int sample_rate() const { return sample_rate_; }
  std::size_t fft_size() const { return fft_size_; }
  const std::vector<double>& center_freqs() const { return center_freqs_; }
  // Real, zero-phase gain per one-sided bin.
  std::span<const double> response(int band) const;

  // One-sided spectrum of `samples` zero-padded to fft_size().
  std::vector<Complex> spectrum(std::span<const double> samples) const;
  // Band `band` of a spectrum from spectrum(), truncated to `length` samples.
  std::vector<double> band_signal(std::span<const Complex> spectrum, int band,
                                  std::size_t length) const;

  // FFT size used for a signal of `length` samples: room for the filter
  // tails on both sides so circular wrap-around stays negligible.
  static std::size_t fft_size_for(std::size_t length, int sample_rate);

 private:
  int sample_rate_;
  std::size_t fft_size_;
  std::vector<double> center_freqs_;
  std::vector<std::vector<double>> responses_;
};

struct Cochleagram {
  std::vector<std::vector<double>> subbands;
  std::vector<double> center_freqs;
  int sample_rate = 0;

  std::size_t n_bands() const { return subbands.size(); }
  std::size_t length() const {
    return subbands.empty() ? 0 : subbands.front().size();
  }
};

// Throws ParameterError if n_bands < 1.
Cochleagram erb_filterbank(const AudioSignal& signal, int n_bands);

// Sum of subbands.
AudioSignal reconstruct(const Cochleagram& cochleagram);

}  // namespace perturbbench

#endif  // PERTURBBENCH_COCHLEAR_FILTERBANK_H_
