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

#ifndef PERTURBBENCH_STATS_GINI_H_
#define PERTURBBENCH_STATS_GINI_H_

#include <span>
#include <string>

#include "perturbbench/perturb/spec.h"
#include "perturbbench/signal/audio.h"

namespace perturbbench {

// Gini coefficient sum_i sum_j |x_i - x_j| / (2 n^2 mean(x)), evaluated in
// O(n log n) via the sorted form sum_i (2i - n - 1) x_(i) / (n sum x).
// Returns 0 for an all-zero vector. Throws ParameterError for an empty
// vector or negative entries.
double gini(std::span<const double> x);

enum class SparsityDomain { kTime, kFreq };
enum class SliceReducer { kMean };

// Gini of every window_ms slice (|samples| in time, one-sided FFT magnitudes
// of the untapered slice in frequency), reduced over slices. A trailing
// partial slice counts as a slice.
double windowed_gini(const AudioSignal& signal, double window_ms,
                     SparsityDomain domain,
                     SliceReducer reducer = SliceReducer::kMean);

constexpr double kSparsityWindowMs = 220.0;

struct SparsityPoint {
  double g_time = 0.0;
  double g_freq = 0.0;
  double window_ms = kSparsityWindowMs;
  std::string utterance_id;
  PerturbationSpec spec;
};

SparsityPoint sparsity_point(const AudioSignal& signal,
                             const std::string& utterance_id,
                             const PerturbationSpec& spec,
                             double window_ms = kSparsityWindowMs);

}  // namespace perturbbench

#endif  // PERTURBBENCH_STATS_GINI_H_
