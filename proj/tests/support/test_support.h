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


#ifndef PERTURBBENCH_TESTS_SUPPORT_TEST_SUPPORT_H_
#define PERTURBBENCH_TESTS_SUPPORT_TEST_SUPPORT_H_

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "perturbbench/eval/wer.h"
#include "perturbbench/harness/manifest.h"
#include "perturbbench/signal/audio.h"

namespace perturbbench::testing {

std::filesystem::path speech_dir();
std::filesystem::path mock_bridge_path();

// The transcribed utterances of the bundled corpus, in manifest order.
std::vector<ManifestEntry> speech_manifest();

// Every bundled recording, sorted by file name, with its id (file stem).
struct NamedSignal {
  std::string id;
  AudioSignal signal;
};
std::vector<NamedSignal> speech_recordings();

// Consecutive clip_ms pieces of every bundled recording; trailing pieces
// shorter than min_ms are dropped.
std::vector<NamedSignal> speech_clips(double clip_ms = 1000.0,
                                      double min_ms = 500.0);

AudioSignal sine(double freq_hz, double duration_ms, int rate = 16000,
                 double amplitude = 0.5);
AudioSignal white_noise(std::size_t n, std::uint64_t seed, int rate = 16000,
                        double stddev = 0.1);

// 10 log10(|ref|^2 / |ref - est|^2); +inf for an exact match.
double snr_db(std::span<const double> ref, std::span<const double> est);

// Fresh directory under the system temp dir, removed on destruction.
class ScratchDir {
 public:
  explicit ScratchDir(const std::string& tag);
  ~ScratchDir();
  ScratchDir(const ScratchDir&) = delete;
  ScratchDir& operator=(const ScratchDir&) = delete;
  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& name) const {
    return path_ / name;
  }

 private:
  std::filesystem::path path_;
};

std::string read_file(const std::filesystem::path& path);

// Writes entries as a TSV manifest.
void write_manifest(const std::filesystem::path& path,
                    const std::vector<ManifestEntry>& entries);

// Reference definitions used as oracles.

// Mean absolute difference over all ordered pairs, in long double.
long double gini_pairwise(std::span<const double> x);

// Enumerates every edit script turning ref into hyp, keeps those of minimum
// cost (S + D + I), and among them the one whose operations, read from the
// end, are lexicographically smallest under C < S < D < I.
WerCounts enumerate_alignments(const std::vector<std::string>& ref,
                               const std::vector<std::string>& hyp);

// Textbook Levenshtein distance.
long levenshtein(const std::vector<std::string>& a,
                 const std::vector<std::string>& b);

}  // namespace perturbbench::testing

#endif  // PERTURBBENCH_TESTS_SUPPORT_TEST_SUPPORT_H_
