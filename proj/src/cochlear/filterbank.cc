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

#include "perturbbench/cochlear/filterbank.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "perturbbench/error.h"
#include "perturbbench/signal/windowing.h"

namespace perturbbench {
namespace {

constexpr double kEarQ = 4.37e-3;
constexpr double kGammatoneBandwidthScale = 1.019;
constexpr double kTailMs = 250.0;

double gammatone_power(double offset_hz, double bandwidth_hz) {
  const double x = offset_hz / bandwidth_hz;
  const double base = 1.0 + x * x;
  return 1.0 / (base * base * base * base);
}

}  // namespace

double erb_bandwidth_hz(double freq_hz) {
  return 24.7 * (kEarQ * freq_hz + 1.0);
}

double erb_rate(double freq_hz) {
  return 21.4 * std::log10(kEarQ * freq_hz + 1.0);
}

double erb_rate_to_hz(double rate) {
  return (std::pow(10.0, rate / 21.4) - 1.0) / kEarQ;
}

std::vector<double> erb_center_frequencies(int n_bands, int sample_rate) {
  if (n_bands < 1) throw ParameterError("n_bands must be >= 1");
  const double high = std::min(kFilterbankHighHz, 0.95 * sample_rate / 2.0);
  if (high <= kFilterbankLowHz) {
    throw ParameterError("sample rate too low for the filterbank range");
  }
  const double lo = erb_rate(kFilterbankLowHz), hi = erb_rate(high);
  std::vector<double> fc(n_bands);
  if (n_bands == 1) {
    fc[0] = erb_rate_to_hz(0.5 * (lo + hi));
    return fc;
  }
  for (int k = 0; k < n_bands; ++k) {
    fc[k] = erb_rate_to_hz(lo + (hi - lo) * k / (n_bands - 1));
  }
  fc.front() = kFilterbankLowHz;
  fc.back() = high;
  return fc;
}

std::size_t ErbFilterbank::fft_size_for(std::size_t length, int sample_rate) {
  return next_fast_size(length + 2 * ms_to_samples(kTailMs, sample_rate));
}

ErbFilterbank::ErbFilterbank(int n_bands, int sample_rate, std::size_t fft_size)
    : sample_rate_(sample_rate),
      fft_size_(fft_size),
      center_freqs_(erb_center_frequencies(n_bands, sample_rate)) {
  const double high = std::min(kFilterbankHighHz, 0.95 * sample_rate / 2.0);
  const double spacing =
      n_bands == 1 ? erb_rate(high) - erb_rate(kFilterbankLowHz)
                   : (erb_rate(high) - erb_rate(kFilterbankLowHz)) /
                         (n_bands - 1);
  const double widen = std::max(1.0, spacing);
  const std::size_t bins = fft_size_ / 2 + 1;
  const double bin_hz = static_cast<double>(sample_rate) / fft_size_;

  responses_.assign(n_bands, std::vector<double>(bins, 0.0));
  std::vector<double> total(bins, 0.0);
  for (int k = 0; k < n_bands; ++k) {
    const double fc = center_freqs_[k];
    const double b = kGammatoneBandwidthScale * erb_bandwidth_hz(fc) * widen;
    for (std::size_t i = 0; i < bins; ++i) {
      const double f = i * bin_hz;
      const double p = gammatone_power(f - fc, b) + gammatone_power(f + fc, b);
      responses_[k][i] = p;
      total[i] += p;
    }
  }

  double floor = std::numeric_limits<double>::max();
  for (std::size_t i = 0; i < bins; ++i) {
    const double f = i * bin_hz;
    if (f >= kFilterbankLowHz && f <= high) floor = std::min(floor, total[i]);
  }
  if (floor == std::numeric_limits<double>::max()) {
    floor = *std::max_element(total.begin(), total.end());
  }
  floor *= 0.5;
  for (auto& r : responses_) {
    for (std::size_t i = 0; i < bins; ++i) r[i] /= std::max(total[i], floor);
  }
}

std::span<const double> ErbFilterbank::response(int band) const {
  return responses_.at(band);
}

std::vector<Complex> ErbFilterbank::spectrum(
    std::span<const double> samples) const {
  if (samples.size() > fft_size_) {
    throw ParameterError("signal longer than the filterbank FFT");
  }
  std::vector<double> padded(fft_size_, 0.0);
  std::copy(samples.begin(), samples.end(), padded.begin());
  return RealFft(fft_size_).forward(padded);
}

std::vector<double> ErbFilterbank::band_signal(std::span<const Complex> spectrum,
                                               int band,
                                               std::size_t length) const {
  const auto gain = response(band);
  std::vector<Complex> filtered(spectrum.begin(), spectrum.end());
  for (std::size_t i = 0; i < filtered.size(); ++i) filtered[i] *= gain[i];
  std::vector<double> out(fft_size_);
  RealFft(fft_size_).inverse(filtered, out);
  out.resize(length);
  return out;
}

Cochleagram erb_filterbank(const AudioSignal& signal, int n_bands) {
  if (n_bands < 1) {
    throw ParameterError("n_bands must be >= 1, got " + std::to_string(n_bands));
  }
  const ErbFilterbank bank(
      n_bands, signal.sample_rate(),
      ErbFilterbank::fft_size_for(signal.size(), signal.sample_rate()));
  const auto spec = bank.spectrum(signal.samples());
  Cochleagram out;
  out.center_freqs = bank.center_freqs();
  out.sample_rate = signal.sample_rate();
  out.subbands.reserve(n_bands);
  for (int k = 0; k < n_bands; ++k) {
    out.subbands.push_back(bank.band_signal(spec, k, signal.size()));
  }
  return out;
}

AudioSignal reconstruct(const Cochleagram& cochleagram) {
  std::vector<double> sum(cochleagram.length(), 0.0);
  for (const auto& band : cochleagram.subbands) {
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += band[i];
  }
  return AudioSignal(std::move(sum), cochleagram.sample_rate);
}

}  // namespace perturbbench
