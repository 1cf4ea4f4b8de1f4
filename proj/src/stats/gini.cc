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

#include "perturbbench/stats/gini.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "perturbbench/error.h"
#include "perturbbench/signal/windowing.h"
#include "perturbbench/spectral/fft.h"

namespace perturbbench {

double gini(std::span<const double> x) {
  if (x.empty()) throw ParameterError("gini of an empty vector");
  std::vector<double> sorted(x.begin(), x.end());
  for (double v : sorted) {
    if (!(v >= 0.0)) throw ParameterError("gini needs non-negative entries");
  }
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());
  // Neumaier-compensated sums; the weighted sum cancels heavily.
  double total = 0.0, total_c = 0.0, weighted = 0.0, weighted_c = 0.0;
  auto add = [](double& sum, double& comp, double v) {
    const double t = sum + v;
    comp += std::abs(sum) >= std::abs(v) ? (sum - t) + v : (v - t) + sum;
    sum = t;
  };
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    add(total, total_c, sorted[i]);
    add(weighted, weighted_c, (2.0 * (i + 1) - n - 1.0) * sorted[i]);
  }
  total += total_c;
  weighted += weighted_c;
  if (total <= 0.0) return 0.0;
  return std::max(0.0, weighted / (n * total));
}

double windowed_gini(const AudioSignal& signal, double window_ms,
                     SparsityDomain domain, SliceReducer reducer) {
  if (!(window_ms > 0.0)) throw ParameterError("window_ms must be positive");
  (void)reducer;  // kMean is the only reducer
  const auto slices = segment(signal, window_ms);
  if (slices.empty()) return 0.0;
  double acc = 0.0;
  std::vector<double> values;
  for (const auto& slice : slices) {
    values.clear();
    if (domain == SparsityDomain::kTime) {
      for (double v : slice) values.push_back(std::abs(v));
    } else {
      for (const auto& z : RealFft(slice.size()).forward(slice)) {
        values.push_back(std::abs(z));
      }
    }
    acc += gini(values);
  }
  return acc / static_cast<double>(slices.size());
}

SparsityPoint sparsity_point(const AudioSignal& signal,
                             const std::string& utterance_id,
                             const PerturbationSpec& spec, double window_ms) {
  SparsityPoint p;
  p.g_time = windowed_gini(signal, window_ms, SparsityDomain::kTime);
  p.g_freq = windowed_gini(signal, window_ms, SparsityDomain::kFreq);
  p.window_ms = window_ms;
  p.utterance_id = utterance_id;
  p.spec = spec;
  return p;
}

}  // namespace perturbbench
