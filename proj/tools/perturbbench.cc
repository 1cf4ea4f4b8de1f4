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

// perturbbench command-line front end.

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "perturbbench/error.h"
#include "perturbbench/harness/csv.h"
#include "perturbbench/harness/grid.h"
#include "perturbbench/harness/manifest.h"
#include "perturbbench/harness/plot.h"
#include "perturbbench/harness/runner.h"
#include "perturbbench/perturb/apply.h"
#include "perturbbench/perturb/spec.h"
#include "perturbbench/signal/wav.h"
#include "perturbbench/stats/gini.h"

namespace pb = perturbbench;
namespace fs = std::filesystem;

namespace {

// Spec flags: --flag-name maps to the PerturbationSpec key flag_name.
const std::vector<std::string> kSpecKeys = {
    "window_ms", "fade_ms",    "factor",    "n_bands",  "freq_win_bands",
    "fraction",  "mode",       "snr_db",    "silence_ms", "selection",
    "seed"};

std::string flag_for(const std::string& key) {
  std::string flag = "--" + key;
  for (auto& c : flag) {
    if (c == '_') c = '-';
  }
  return flag;
}

std::map<std::string, std::string> parse_assignments(
    const std::vector<std::string>& items) {
  std::map<std::string, std::string> out;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw pb::ParameterError("expected key=value, got '" + item + "'");
    }
    out[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return out;
}

pb::SampleEncoding parse_encoding(const std::string& name) {
  if (name == "pcm16") return pb::SampleEncoding::kPcm16;
  if (name == "float32") return pb::SampleEncoding::kFloat32;
  if (name == "float64") return pb::SampleEncoding::kFloat64;
  throw pb::ParameterError("unknown encoding " + name);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Perturb speech, score transcriptions and measure sparsity"};
  app.require_subcommand(1);

  // perturb
  auto* perturb = app.add_subcommand("perturb", "Apply one perturbation to a WAV file");
  std::string p_in, p_out, p_spec, p_kind, p_encoding = "float32";
  std::map<std::string, std::string> p_flags;
  perturb->add_option("--in", p_in, "Input WAV")->required()->check(CLI::ExistingFile);
  perturb->add_option("--out", p_out, "Output WAV")->required();
  auto* spec_opt = perturb->add_option("--spec", p_spec, "Spec text, e.g. reverse:window_ms=150");
  auto* kind_opt = perturb->add_option("--kind", p_kind, "Perturbation kind");
  spec_opt->excludes(kind_opt);
  for (const auto& key : kSpecKeys) {
    perturb->add_option_function<std::string>(
        flag_for(key), [&p_flags, key](const std::string& v) { p_flags[key] = v; },
        "Spec parameter " + key);
  }
  perturb->add_option("--encoding", p_encoding, "pcm16, float32 or float64")
      ->check(CLI::IsMember({"pcm16", "float32", "float64"}));

  // sparsity
  auto* sparsity = app.add_subcommand("sparsity", "Print time and frequency Gini per file");
  std::vector<std::string> s_in;
  std::string s_manifest, s_spec = "none";
  double s_window = pb::kSparsityWindowMs;
  sparsity->add_option("--in", s_in, "Input WAV files")->check(CLI::ExistingFile);
  sparsity->add_option("--manifest", s_manifest, "Manifest of utterances")->check(CLI::ExistingFile);
  sparsity->add_option("--spec", s_spec, "Perturbation applied before measuring");
  sparsity->add_option("--window-ms", s_window, "Analysis slice length")->check(CLI::PositiveNumber);

  // run
  auto* run = app.add_subcommand("run", "Run a perturbation sweep over a corpus");
  std::string r_manifest, r_experiment, r_bridge = "oracle", r_out;
  std::uint64_t r_seed = 0;
  int r_workers = 1, r_retries = 2;
  double r_timeout = 120.0;
  std::vector<std::string> r_set;
  bool r_quiet = false;
  run->add_option("--manifest", r_manifest, "Manifest (TSV or JSON lines)")->required()->check(CLI::ExistingFile);
  run->add_option("--experiment", r_experiment, "Perturbation kind to sweep")->required();
  run->add_option("--bridge-cmd", r_bridge,
                  "oracle, empty, noisy-oracle(p) or a shell command")
      ->capture_default_str();
  run->add_option("--out", r_out, "Output directory")->required();
  run->add_option("--seed", r_seed, "Corpus seed")->capture_default_str();
  run->add_option("--workers", r_workers, "Concurrent tasks")->check(CLI::PositiveNumber)->capture_default_str();
  run->add_option("--max-retries", r_retries, "Retries per failed bridge call")->check(CLI::NonNegativeNumber)->capture_default_str();
  run->add_option("--bridge-timeout", r_timeout, "Seconds per bridge reply")->check(CLI::PositiveNumber)->capture_default_str();
  run->add_option("--set", r_set, "Fixed spec parameter key=value for every grid point");
  run->add_flag("--quiet", r_quiet, "No progress output");

  // plot
  auto* plot = app.add_subcommand("plot", "Render summary.csv as an SVG");
  std::string pl_summary, pl_out, pl_scale = "auto", pl_title;
  bool pl_reverse = false, pl_no_reverse = false;
  plot->add_option("--summary", pl_summary, "summary.csv")->required()->check(CLI::ExistingFile);
  plot->add_option("--out", pl_out, "Output SVG")->required();
  plot->add_option("--x-scale", pl_scale, "auto, log or linear")->check(CLI::IsMember({"auto", "log", "linear"}));
  plot->add_option("--title", pl_title, "Plot title");
  auto* rev = plot->add_flag("--reverse-y", pl_reverse, "WER axis increasing downward");
  plot->add_flag("--no-reverse-y", pl_no_reverse, "WER axis increasing upward")->excludes(rev);

  // grid
  auto* grid = app.add_subcommand("grid", "Print the sweep for a perturbation kind");
  std::string g_experiment;
  std::vector<std::string> g_set;
  grid->add_option("--experiment", g_experiment, "Perturbation kind")->required();
  grid->add_option("--set", g_set, "Fixed spec parameter key=value");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*perturb) {
      pb::PerturbationSpec spec;
      if (!p_spec.empty()) {
        spec = pb::PerturbationSpec::parse(p_spec);
        for (const auto& [k, v] : p_flags) spec = spec.with(k, v);
      } else if (!p_kind.empty()) {
        pb::PerturbationSpec::Params params(p_flags.begin(), p_flags.end());
        spec = pb::PerturbationSpec(pb::parse_kind(p_kind), std::move(params));
      } else {
        throw pb::ParameterError("one of --spec or --kind is required");
      }
      const auto out = pb::apply(spec, pb::load_wav(p_in));
      pb::save_wav(out, p_out, parse_encoding(p_encoding));
      std::cout << spec.canonical() << "\n";
    } else if (*sparsity) {
      std::vector<std::pair<std::string, fs::path>> inputs;
      if (!s_manifest.empty()) {
        for (const auto& e : pb::load_manifest(s_manifest)) {
          inputs.emplace_back(e.utterance_id, e.audio_path);
        }
      }
      for (const auto& path : s_in) {
        inputs.emplace_back(fs::path(path).stem().string(), path);
      }
      if (inputs.empty()) throw pb::ParameterError("give --in or --manifest");
      const auto spec = pb::PerturbationSpec::parse(s_spec);
      std::cout << pb::csv_line({"utterance_id", "spec", "window_ms", "g_time", "g_freq"});
      for (const auto& [id, path] : inputs) {
        const auto sp = pb::sparsity_point(pb::apply(spec, pb::load_wav(path)),
                                           id, spec, s_window);
        std::cout << pb::csv_line({sp.utterance_id, sp.spec.canonical(),
                                   pb::csv_number(sp.window_ms),
                                   pb::csv_number(sp.g_time),
                                   pb::csv_number(sp.g_freq)});
      }
    } else if (*run) {
      pb::RunOptions opts;
      opts.manifest = pb::load_manifest(r_manifest);
      opts.grid = pb::build_grid(pb::parse_kind(r_experiment), parse_assignments(r_set));
      opts.bridge = r_bridge;
      opts.out_dir = r_out;
      opts.corpus_seed = r_seed;
      opts.workers = r_workers;
      opts.max_retries = r_retries;
      opts.bridge_timeout = std::chrono::milliseconds(
          static_cast<long long>(r_timeout * 1000.0));
      if (!r_quiet) {
        opts.progress = [](std::size_t done, std::size_t total) {
          std::cerr << "\r" << done << "/" << total << std::flush;
          if (done == total) std::cerr << "\n";
        };
      }
      const auto report = pb::run_experiment(opts);
      pb::emit_curves(report.summary_csv, fs::path(r_out) / "summary.svg");
      std::cout << "rows " << report.rows << "\n"
                << "failures " << report.failures << "\n"
                << "cache_hits " << report.cache_hits << "\n"
                << "bridge_calls " << report.bridge_calls << "\n"
                << "results " << report.results_csv.string() << "\n"
                << "summary " << report.summary_csv.string() << "\n";
      return report.failures == 0 ? 0 : 3;
    } else if (*plot) {
      pb::AxisSpec axes;
      axes.x_scale = pl_scale == "log"      ? pb::AxisScale::kLog
                     : pl_scale == "linear" ? pb::AxisScale::kLinear
                                            : pb::AxisScale::kAuto;
      if (pl_reverse) axes.reverse_y = true;
      if (pl_no_reverse) axes.reverse_y = false;
      axes.title = pl_title;
      pb::emit_curves(pl_summary, pl_out, axes);
    } else if (*grid) {
      const auto g = pb::build_grid(pb::parse_kind(g_experiment), parse_assignments(g_set));
      std::cout << pb::csv_line({"spec", g.sweep_param.empty() ? "param_value" : g.sweep_param});
      for (const auto& p : g.points) {
        std::cout << pb::csv_line({p.spec.canonical(), pb::csv_number(p.param_value)});
      }
    }
  } catch (const pb::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
