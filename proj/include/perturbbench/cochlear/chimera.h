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

#ifndef PERTURBBENCH_COCHLEAR_CHIMERA_H_
#define PERTURBBENCH_COCHLEAR_CHIMERA_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "perturbbench/signal/audio.h"

namespace perturbbench {

// Envelope guard, relative to the envelope peak.
constexpr double kEnvelopeEpsilon = 1e-8;

struct EnvTfsPair {
  std::vector<double> envelope;        // |analytic signal|
  std::vector<double> fine_structure;  // subband / envelope, 0 under the guard
};

// Hilbert envelope / temporal fine structure split of one subband.
// envelope[i] * fine_structure[i] == subband[i] wherever
// envelope[i] > kEnvelopeEpsilon * max(envelope).
EnvTfsPair envelope_tfs(std::span<const double> subband);

// Per band, the envelope of env_source modulates the fine structure of
// tfs_source; bands are summed. The shorter input is zero-padded.
// Throws ParameterError on a sample-rate mismatch or n_bands < 1.
AudioSignal chimerize(const AudioSignal& env_source,
                      const AudioSignal& tfs_source, int n_bands);

// Locally time-reverses every subband envelope in windows of window_ms and
// recombines it with the untouched fine structure.
AudioSignal reverse_envelopes(const AudioSignal& signal, int n_bands,
                              double window_ms);

// Replaces every envelope sample by the RMS of its time x frequency cell:
// freq_win_bands adjacent bands by time_win_samples samples. Partial cells at
// the top band group or the signal end are kept.
std::vector<std::vector<double>> pixelate_envelopes(
    const std::vector<std::vector<double>>& envelopes, int freq_win_bands,
    std::size_t time_win_samples);

// Mosaic speech: cell-averaged speech envelopes modulate the fine structure
// of band-filtered Gaussian noise (one seeded stream per band).
// Throws ParameterError unless 1 <= freq_win_bands <= n_bands and
// time_win_ms > 0.
AudioSignal mosaicize(const AudioSignal& signal, int n_bands,
                      int freq_win_bands, double time_win_ms,
                      std::uint64_t seed);

}  // namespace perturbbench

#endif  // PERTURBBENCH_COCHLEAR_CHIMERA_H_
