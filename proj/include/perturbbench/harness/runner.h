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

#ifndef PERTURBBENCH_HARNESS_RUNNER_H_
#define PERTURBBENCH_HARNESS_RUNNER_H_

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "perturbbench/eval/wer.h"
#include "perturbbench/harness/bridge.h"
#include "perturbbench/harness/csv.h"
#include "perturbbench/harness/grid.h"
#include "perturbbench/harness/manifest.h"

namespace perturbbench {

struct ResultRow {
  std::string utterance_id;
  std::string spec;  // canonical grid spec, without the derived seed
  double wer = 0.0;
  WerCounts counts;
  double g_time = 0.0;
  double g_freq = 0.0;
  std::string transcript;

  friend bool operator==(const ResultRow&, const ResultRow&) = default;
};

const CsvRow& result_header();
const CsvRow& summary_header();
const CsvRow& failure_header();

struct RunOptions {
  std::vector<ManifestEntry> manifest;
  ExperimentGrid grid;
  // Bridge description for make_transcriber_factory(); also part of the
  // cache key.
  std::string bridge = "oracle";
  std::filesystem::path out_dir;
  std::uint64_t corpus_seed = 0;
  int workers = 1;
  int max_retries = 2;
  std::chrono::milliseconds bridge_timeout{120000};
  double sparsity_window_ms = 220.0;
  // Temp WAV directory; empty means $PERTURBBENCH_TMPDIR or the system temp
  // directory.
  std::filesystem::path tmp_dir;
  // Called after each finished task with (done, total).
  std::function<void(std::size_t, std::size_t)> progress;
};

struct RunReport {
  std::filesystem::path results_csv;
  std::filesystem::path summary_csv;
  std::filesystem::path failures_csv;
  std::size_t rows = 0;
  std::size_t failures = 0;
  std::size_t cache_hits = 0;
  std::size_t bridge_calls = 0;  // transcription requests, retries included
};

// For every (manifest entry x grid point): load, perturb with a seed derived
// from (corpus_seed, utterance id, spec), write a temp WAV, transcribe, score
// and measure sparsity. Finished rows are journaled to out_dir/cache.jsonl
// and skipped on reruns with the same seed and bridge. A task whose bridge
// call fails is retried max_retries times with a fresh bridge, then recorded
// in failures.csv; the run continues.
//
// Writes results.csv (sorted by spec, then utterance id), summary.csv (grid
// order; mean WER with a normal-approximation 95% CI, mean sparsity) and
// failures.csv into out_dir. Output bytes do not depend on `workers`.
//
// Throws ParameterError for an empty manifest or grid, IoError if out_dir
// cannot be written.
RunReport run_experiment(const RunOptions& options);

// Temp WAV directory resolution used by run_experiment.
std::filesystem::path resolve_tmp_dir(const std::filesystem::path& requested);

}  // namespace perturbbench

#endif  // PERTURBBENCH_HARNESS_RUNNER_H_
