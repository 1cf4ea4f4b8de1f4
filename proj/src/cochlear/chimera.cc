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

#include "perturbbench/cochlear/chimera.h"

#include <algorithm>
#include <cmath>

#include "perturbbench/cochlear/filterbank.h"
#include "perturbbench/error.h"
#include "perturbbench/signal/noise.h"
#include "perturbbench/signal/windowing.h"
#include "perturbbench/spectral/fft.h"

namespace perturbbench {
namespace {

std::vector<EnvTfsPair> split_bands(const Cochleagram& cg) {
  std::vector<EnvTfsPair> out;
  out.reserve(cg.n_bands());
  for (const auto& band : cg.subbands) out.push_back(envelope_tfs(band));
  return out;
}

std::vector<double> padded_to(std::span<const double> x, std::size_t n) {
  std::vector<double> out(x.begin(), x.end());
  out.resize(n, 0.0);
  return out;
}

}  // namespace

EnvTfsPair envelope_tfs(std::span<const double> subband) {
  const std::size_t n = subband.size();
  EnvTfsPair out{std::vector<double>(n, 0.0), std::vector<double>(n, 0.0)};
  if (n == 0) return out;

  // Zero padding keeps the circular Hilbert transform from wrapping the two
  // signal edges into each other.
  const std::size_t size = next_fast_size(2 * n);
  std::vector<Complex> spec(size);
  {
    std::vector<Complex> time(size, Complex(0.0, 0.0));
    for (std::size_t i = 0; i < n; ++i) time[i] = subband[i];
    ComplexFft(size).forward(time, spec);
  }
  const std::size_t half = size / 2;
  for (std::size_t k = 1; k < size; ++k) {
    if (k < half || (size % 2 == 1 && k == half)) {
      spec[k] *= 2.0;
    } else if (k > half) {
      spec[k] = 0.0;
    }
  }
  std::vector<Complex> analytic(size);
  ComplexFft(size).inverse(spec, analytic);

  double peak = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    out.envelope[i] = std::abs(analytic[i]);
    peak = std::max(peak, out.envelope[i]);
  }
  const double guard = kEnvelopeEpsilon * peak;
  for (std::size_t i = 0; i < n; ++i) {
    if (out.envelope[i] > guard) {
      out.fine_structure[i] = subband[i] / out.envelope[i];
    }
  }
  return out;
}

AudioSignal chimerize(const AudioSignal& env_source,
                      const AudioSignal& tfs_source, int n_bands) {
  if (env_source.sample_rate() != tfs_source.sample_rate()) {
    throw ParameterError("chimera sources differ in sample rate");
  }
  const int rate = env_source.sample_rate();
  const std::size_t n = std::max(env_source.size(), tfs_source.size());
  const AudioSignal a(padded_to(env_source.samples(), n), rate);
  const AudioSignal b(padded_to(tfs_source.samples(), n), rate);
  const auto env_bands = split_bands(erb_filterbank(a, n_bands));
  const auto tfs_bands = split_bands(erb_filterbank(b, n_bands));

  std::vector<double> out(n, 0.0);
  for (int k = 0; k < n_bands; ++k) {
    const auto& env = env_bands[k].envelope;
    const auto& tfs = tfs_bands[k].fine_structure;
    for (std::size_t i = 0; i < n; ++i) out[i] += env[i] * tfs[i];
  }
  return AudioSignal(std::move(out), rate);
}

AudioSignal reverse_envelopes(const AudioSignal& signal, int n_bands,
                              double window_ms) {
  if (!(window_ms > 0.0)) throw ParameterError("window_ms must be positive");
  const std::size_t window = ms_to_samples(window_ms, signal.sample_rate());
  const auto bands = split_bands(erb_filterbank(signal, n_bands));
  std::vector<double> out(signal.size(), 0.0);
  for (const auto& band : bands) {
    std::vector<double> env = band.envelope;
    for (std::size_t start = 0; start < env.size(); start += window) {
      const std::size_t stop = std::min(env.size(), start + window);
      std::reverse(env.begin() + start, env.begin() + stop);
    }
    for (std::size_t i = 0; i < out.size(); ++i) {
      out[i] += env[i] * band.fine_structure[i];
    }
  }
  return AudioSignal(std::move(out), signal.sample_rate());
}

std::vector<std::vector<double>> pixelate_envelopes(
    const std::vector<std::vector<double>>& envelopes, int freq_win_bands,
    std::size_t time_win_samples) {
  const int n_bands = static_cast<int>(envelopes.size());
  if (freq_win_bands < 1 || freq_win_bands > n_bands) {
    throw ParameterError("freq_win_bands must be in [1, n_bands]");
  }
  if (time_win_samples == 0) throw ParameterError("empty time window");
  const std::size_t len = envelopes.front().size();
  std::vector<std::vector<double>> out(n_bands, std::vector<double>(len, 0.0));
  for (int b0 = 0; b0 < n_bands; b0 += freq_win_bands) {
    const int b1 = std::min(n_bands, b0 + freq_win_bands);
    for (std::size_t t0 = 0; t0 < len; t0 += time_win_samples) {
      const std::size_t t1 = std::min(len, t0 + time_win_samples);
      double acc = 0.0;
      for (int b = b0; b < b1; ++b) {
        for (std::size_t t = t0; t < t1; ++t) {
          acc += envelopes[b][t] * envelopes[b][t];
        }
      }
      const double rms =
          std::sqrt(acc / (static_cast<double>(b1 - b0) * (t1 - t0)));
      for (int b = b0; b < b1; ++b) {
        std::fill(out[b].begin() + t0, out[b].begin() + t1, rms);
      }
    }
  }
  return out;
}

AudioSignal mosaicize(const AudioSignal& signal, int n_bands,
                      int freq_win_bands, double time_win_ms,
                      std::uint64_t seed) {
  if (n_bands < 1) throw ParameterError("n_bands must be >= 1");
  if (freq_win_bands < 1 || freq_win_bands > n_bands) {
    throw ParameterError("freq_win_bands must be in [1, n_bands]");
  }
  if (!(time_win_ms > 0.0)) throw ParameterError("time window must be positive");
  const int rate = signal.sample_rate();
  const std::size_t n = signal.size();
  if (n == 0) return signal;

  const ErbFilterbank bank(n_bands, rate, ErbFilterbank::fft_size_for(n, rate));
  const auto speech_spec = bank.spectrum(signal.samples());
  std::vector<std::vector<double>> envelopes;
  envelopes.reserve(n_bands);
  for (int k = 0; k < n_bands; ++k) {
    envelopes.push_back(
        envelope_tfs(bank.band_signal(speech_spec, k, n)).envelope);
  }
  const auto cells = pixelate_envelopes(envelopes, freq_win_bands,
                                        ms_to_samples(time_win_ms, rate));

  std::vector<double> out(n, 0.0);
  for (int k = 0; k < n_bands; ++k) {
    const auto noise = gaussian_noise(n, substream_seed(seed, k));
    const auto carrier =
        envelope_tfs(bank.band_signal(bank.spectrum(noise), k, n))
            .fine_structure;
    for (std::size_t i = 0; i < n; ++i) out[i] += cells[k][i] * carrier[i];
  }
  return AudioSignal(std::move(out), rate);
}

}  // namespace perturbbench
