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

#ifndef PERTURBBENCH_SIGNAL_AUDIO_H_
#define PERTURBBENCH_SIGNAL_AUDIO_H_

#include <cstddef>
#include <span>
#include <vector>

namespace perturbbench {

// Mono sample sequence at a fixed rate. Samples are finite 64-bit reals with
// a nominal range of [-1, 1]; values outside that range are legal (additive
// masking noise can exceed it).
class AudioSignal {
 public:
  AudioSignal(std::vector<double> samples, int sample_rate);

  // Silent signal of `length` samples.
  static AudioSignal zeros(std::size_t length, int sample_rate);

  std::span<const double> samples() const { return samples_; }
  const std::vector<double>& vector() const { return samples_; }
  int sample_rate() const { return sample_rate_; }
  std::size_t size() const { return samples_.size(); }
  bool empty() const { return samples_.empty(); }
  double duration_ms() const;

  double operator[](std::size_t i) const { return samples_[i]; }

  friend bool operator==(const AudioSignal&, const AudioSignal&) = default;

 private:
  std::vector<double> samples_;
  int sample_rate_;
};

// Mean of squared samples; zero for an empty signal.
double mean_power(std::span<const double> x);

// Pearson correlation of two equal-length sequences (0 when either is flat).
double correlation(std::span<const double> a, std::span<const double> b);

}  // namespace perturbbench

#endif  // PERTURBBENCH_SIGNAL_AUDIO_H_
