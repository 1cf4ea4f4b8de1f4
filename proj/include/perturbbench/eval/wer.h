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

#ifndef PERTURBBENCH_EVAL_WER_H_
#define PERTURBBENCH_EVAL_WER_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace perturbbench {

using Tokens = std::vector<std::string>;

// Uppercases, deletes every character outside [A-Z' ] (other whitespace acts
// as a space), and splits on runs of spaces.
Tokens normalize_text(std::string_view text);

struct WerCounts {
  long s = 0;  // substitutions
  long d = 0;  // deletions
  long i = 0;  // insertions
  long c = 0;  // correct

  long reference_length() const { return s + d + c; }
  long hypothesis_length() const { return s + i + c; }
  WerCounts& operator+=(const WerCounts& o);
  friend bool operator==(const WerCounts&, const WerCounts&) = default;
};

// Minimum unit-cost edit alignment. Among equal-cost alignments the
// backtrace from the end prefers correct, then substitution, then deletion,
// then insertion, so the counts are deterministic.
WerCounts align(std::span<const std::string> ref,
                std::span<const std::string> hyp);

// (S + D + I) / (S + D + C). Throws UndefinedReferenceError when the
// reference is empty. May exceed 1.
double wer(const WerCounts& counts);

struct WerAggregate {
  double mean_wer = 0.0;    // mean of per-utterance WER
  double pooled_wer = 0.0;  // WER of the summed counts
};

// Throws ParameterError on an empty list.
WerAggregate aggregate(std::span<const WerCounts> per_utterance);

}  // namespace perturbbench

#endif  // PERTURBBENCH_EVAL_WER_H_
