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

#include "perturbbench/harness/runner.h"

#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <thread>
#include <utility>

#include <json.hpp>

#include "perturbbench/error.h"
#include "perturbbench/perturb/apply.h"
#include "perturbbench/signal/noise.h"
#include "perturbbench/signal/wav.h"
#include "perturbbench/stats/gini.h"

namespace perturbbench {
namespace {

using json = nlohmann::json;
namespace fs = std::filesystem;

using RowKey = std::pair<std::string, std::string>;  // (spec, utterance_id)

struct Failure {
  std::string utterance_id;
  std::string spec;
  int attempts = 0;
  std::string error;
};

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

json row_to_json(const ResultRow& r, std::uint64_t seed,
                 const std::string& bridge) {
  return json{{"utterance_id", r.utterance_id},
              {"spec", r.spec},
              {"corpus_seed", seed},
              {"bridge", bridge},
              {"wer", r.wer},
              {"s", r.counts.s},
              {"d", r.counts.d},
              {"i", r.counts.i},
              {"c", r.counts.c},
              {"g_time", r.g_time},
              {"g_freq", r.g_freq},
              {"transcript", r.transcript}};
}

// Journal of finished rows. Lines for other seeds or bridges are ignored, as
// are torn trailing lines from an interrupted run.
std::map<RowKey, ResultRow> load_cache(const fs::path& path, std::uint64_t seed,
                                       const std::string& bridge) {
  std::map<RowKey, ResultRow> rows;
  std::ifstream in(path);
  std::string line;
  while (std::getline(in, line)) {
    json j;
    try {
      j = json::parse(line);
      if (j.at("corpus_seed").get<std::uint64_t>() != seed ||
          j.at("bridge").get<std::string>() != bridge) {
        continue;
      }
      ResultRow r;
      r.utterance_id = j.at("utterance_id").get<std::string>();
      r.spec = j.at("spec").get<std::string>();
      r.wer = j.at("wer").get<double>();
      r.counts = {j.at("s").get<long>(), j.at("d").get<long>(),
                  j.at("i").get<long>(), j.at("c").get<long>()};
      r.g_time = j.at("g_time").get<double>();
      r.g_freq = j.at("g_freq").get<double>();
      r.transcript = j.at("transcript").get<std::string>();
      rows[{r.spec, r.utterance_id}] = std::move(r);
    } catch (const json::exception&) {
      continue;
    }
  }
  return rows;
}

void write_file(const fs::path& path, const std::string& text) {
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + tmp.string());
    out << text;
    if (!out) throw IoError("write failed for " + tmp.string());
  }
  fs::rename(tmp, path);
}

class Journal {
 public:
  explicit Journal(const fs::path& path) : out_(path, std::ios::app) {
    if (!out_) throw IoError("cannot open " + path.string());
  }
  void append(const json& j) {
    std::lock_guard lock(mu_);
    out_ << j.dump() << '\n';
    out_.flush();
  }

 private:
  std::mutex mu_;
  std::ofstream out_;
};

struct Task {
  const ManifestEntry* entry;
  const GridPoint* point;
  std::string spec;
};

}  // namespace

const CsvRow& result_header() {
  static const CsvRow h = {"utterance_id", "spec", "wer",    "s",      "d",
                           "i",            "c",    "g_time", "g_freq", "transcript"};
  return h;
}

const CsvRow& summary_header() {
  static const CsvRow h = {"spec",       "param_value", "mean_wer",
                           "ci_low",     "ci_high",     "mean_g_time",
                           "mean_g_freq", "n",          "failures"};
  return h;
}

const CsvRow& failure_header() {
  static const CsvRow h = {"utterance_id", "spec", "attempts", "error"};
  return h;
}

fs::path resolve_tmp_dir(const fs::path& requested) {
  if (!requested.empty()) return fs::absolute(requested);
  if (const char* env = std::getenv("PERTURBBENCH_TMPDIR"); env && *env) {
    return fs::absolute(env);
  }
  return fs::temp_directory_path() / "perturbbench";
}

RunReport run_experiment(const RunOptions& options) {
  if (options.manifest.empty()) throw ParameterError("empty manifest");
  if (options.grid.points.empty()) throw ParameterError("empty grid");
  if (options.workers < 1) throw ParameterError("workers must be >= 1");

  std::error_code ec;
  fs::create_directories(options.out_dir, ec);
  if (!fs::is_directory(options.out_dir)) {
    throw IoError("cannot create output directory " + options.out_dir.string());
  }
  const fs::path tmp_dir = resolve_tmp_dir(options.tmp_dir);
  fs::create_directories(tmp_dir, ec);

  const TranscriberFactory factory =
      make_transcriber_factory(options.bridge, options.bridge_timeout);
  const fs::path cache_path = options.out_dir / "cache.jsonl";
  std::map<RowKey, ResultRow> rows =
      load_cache(cache_path, options.corpus_seed, options.bridge);

  RunReport report;
  std::vector<Task> tasks;
  std::vector<RowKey> wanted;
  for (const auto& point : options.grid.points) {
    const std::string spec = point.spec.canonical();
    for (const auto& entry : options.manifest) {
      RowKey key{spec, entry.utterance_id};
      wanted.push_back(key);
      if (rows.count(key)) {
        ++report.cache_hits;
      } else {
        tasks.push_back({&entry, &point, spec});
      }
    }
  }

  Journal journal(cache_path);
  std::mutex mu;
  std::vector<Failure> failures;
  std::atomic<std::size_t> next{0}, done{0}, calls{0};
  const pid_t pid = ::getpid();

  auto worker = [&] {
    std::unique_ptr<Transcriber> bridge;
    for (std::size_t t = next++; t < tasks.size(); t = next++) {
      const Task& task = tasks[t];
      const ManifestEntry& entry = *task.entry;
      const std::uint64_t seed =
          derive_seed(options.corpus_seed, entry.utterance_id, task.spec);
      int attempts = 0;
      std::string error;
      std::optional<ResultRow> row;
      try {
        const AudioSignal audio = load_wav(entry.audio_path);
        const AudioSignal perturbed =
            apply(task.point->spec.with_seed(seed), audio);
        const SparsityPoint sp =
            sparsity_point(perturbed, entry.utterance_id, task.point->spec,
                           options.sparsity_window_ms);
        const Tokens ref = normalize_text(entry.reference);
        if (ref.empty()) {
          throw UndefinedReferenceError("reference transcript is empty");
        }

        const TranscriptionRequest request{
            entry.utterance_id + "#" + hex64(seed),
            tmp_dir / ("pb-" + std::to_string(pid) + "-" + hex64(seed) + "-" +
                       hex64(stable_hash(entry.utterance_id)) + ".wav"),
            entry.reference};
        save_wav(perturbed, request.wav, SampleEncoding::kFloat32);
        std::string text;
        bool ok = false;
        while (!ok && attempts <= options.max_retries) {
          ++attempts;
          ++calls;
          try {
            if (!bridge) bridge = factory();
            text = bridge->transcribe(request);
            ok = true;
          } catch (const BridgeError& e) {
            bridge.reset();
            error = e.what();
          }
        }
        fs::remove(request.wav, ec);
        if (ok) {
          ResultRow r;
          r.utterance_id = entry.utterance_id;
          r.spec = task.spec;
          r.transcript = text;
          r.counts = align(ref, normalize_text(text));
          r.wer = wer(r.counts);
          r.g_time = sp.g_time;
          r.g_freq = sp.g_freq;
          row = std::move(r);
        }
      } catch (const std::exception& e) {
        error = e.what();
        attempts = std::max(attempts, 1);
      }

      if (row) {
        journal.append(row_to_json(*row, options.corpus_seed, options.bridge));
        std::lock_guard lock(mu);
        rows[{row->spec, row->utterance_id}] = std::move(*row);
      } else {
        std::lock_guard lock(mu);
        failures.push_back({entry.utterance_id, task.spec, attempts, error});
      }
      const std::size_t finished = ++done;
      if (options.progress) {
        std::lock_guard lock(mu);
        options.progress(finished, tasks.size());
      }
    }
  };

  if (!tasks.empty()) {
    const int n_threads =
        std::min<int>(options.workers, static_cast<int>(tasks.size()));
    std::vector<std::jthread> pool;
    for (int i = 1; i < n_threads; ++i) pool.emplace_back(worker);
    worker();
  }
  report.bridge_calls = calls;

  // Results, ordered by (spec, utterance_id).
  std::sort(wanted.begin(), wanted.end());
  std::string results = csv_line(result_header());
  std::map<std::string, std::vector<const ResultRow*>> by_spec;
  for (const auto& key : wanted) {
    const auto it = rows.find(key);
    if (it == rows.end()) continue;
    const ResultRow& r = it->second;
    by_spec[r.spec].push_back(&r);
    results += csv_line({r.utterance_id, r.spec, csv_number(r.wer),
                         std::to_string(r.counts.s), std::to_string(r.counts.d),
                         std::to_string(r.counts.i), std::to_string(r.counts.c),
                         csv_number(r.g_time), csv_number(r.g_freq),
                         r.transcript});
    ++report.rows;
  }

  std::sort(failures.begin(), failures.end(), [](const auto& a, const auto& b) {
    return std::tie(a.spec, a.utterance_id) < std::tie(b.spec, b.utterance_id);
  });
  std::map<std::string, std::size_t> failures_by_spec;
  std::string failure_text = csv_line(failure_header());
  for (const auto& f : failures) {
    ++failures_by_spec[f.spec];
    failure_text += csv_line({f.utterance_id, f.spec, std::to_string(f.attempts),
                              f.error});
  }
  report.failures = failures.size();

  std::string summary = csv_line(summary_header());
  for (const auto& point : options.grid.points) {
    const std::string spec = point.spec.canonical();
    const auto& group = by_spec[spec];
    const std::size_t n = group.size();
    double mean = std::nan(""), lo = std::nan(""), hi = std::nan("");
    double gt = std::nan(""), gf = std::nan("");
    if (n > 0) {
      double sum = 0.0, sum_gt = 0.0, sum_gf = 0.0;
      for (const auto* r : group) {
        sum += r->wer;
        sum_gt += r->g_time;
        sum_gf += r->g_freq;
      }
      mean = sum / n;
      gt = sum_gt / n;
      gf = sum_gf / n;
      double ss = 0.0;
      for (const auto* r : group) ss += (r->wer - mean) * (r->wer - mean);
      const double sd = n > 1 ? std::sqrt(ss / (n - 1)) : 0.0;
      const double half = 1.96 * sd / std::sqrt(static_cast<double>(n));
      lo = mean - half;
      hi = mean + half;
    }
    summary += csv_line({spec, csv_number(point.param_value), csv_number(mean),
                         csv_number(lo), csv_number(hi), csv_number(gt),
                         csv_number(gf), std::to_string(n),
                         std::to_string(failures_by_spec[spec])});
  }

  report.results_csv = options.out_dir / "results.csv";
  report.summary_csv = options.out_dir / "summary.csv";
  report.failures_csv = options.out_dir / "failures.csv";
  write_file(report.results_csv, results);
  write_file(report.summary_csv, summary);
  write_file(report.failures_csv, failure_text);
  return report;
}

}  // namespace perturbbench
