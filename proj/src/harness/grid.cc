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

#include "perturbbench/harness/grid.h"

#include <cmath>

#include "perturbbench/error.h"

namespace perturbbench {
namespace {

using Params = PerturbationSpec::Params;

ExperimentGrid window_sweep(PerturbationKind kind, Params fixed, double lo,
                            double hi, int n) {
  ExperimentGrid g;
  g.kind = kind;
  g.sweep_param = "window_ms";
  g.log_spaced = true;
  for (double w : log_space(lo, hi, n)) {
    Params p = fixed;
    p["window_ms"] = format_number(w);
    g.points.push_back({PerturbationSpec(kind, std::move(p)), w});
  }
  return g;
}

}  // namespace

std::vector<double> log_space(double first, double last, int n) {
  if (n < 1 || !(first > 0.0) || !(last > 0.0)) {
    throw ParameterError("log_space needs n >= 1 and positive endpoints");
  }
  std::vector<double> out(n);
  if (n == 1) {
    out[0] = first;
    return out;
  }
  const double a = std::log(first), b = std::log(last);
  for (int i = 0; i < n; ++i) out[i] = std::exp(a + (b - a) * i / (n - 1));
  out.front() = first;
  out.back() = last;
  return out;
}

std::string sweep_key(PerturbationKind kind) {
  switch (kind) {
    case PerturbationKind::kNone:
      return "";
    case PerturbationKind::kWarp:
      return "factor";
    case PerturbationKind::kChimera:
      return "n_bands";
    case PerturbationKind::kRepackage:
      return "silence_ms";
    default:
      return "window_ms";
  }
}

ExperimentGrid build_grid(PerturbationKind kind, const GridOverrides& overrides) {
  const std::string swept = sweep_key(kind);
  Params fixed(overrides.begin(), overrides.end());
  if (!swept.empty() && fixed.count(swept)) {
    throw ParameterError("cannot override the swept parameter '" + swept + "'");
  }

  ExperimentGrid g;
  switch (kind) {
    case PerturbationKind::kNone:
      if (!fixed.empty()) throw ParameterError("kind none takes no parameters");
      g.kind = kind;
      g.points.push_back({PerturbationSpec(), 0.0});
      return g;
    case PerturbationKind::kReverse:
    case PerturbationKind::kShuffle:
      return window_sweep(kind, fixed, 0.125, 1200.0, 58);
    case PerturbationKind::kEnvelopeReverse:
      fixed.try_emplace("n_bands", "30");
      return window_sweep(kind, fixed, 10.0, 1200.0, 32);
    case PerturbationKind::kMosaic:
      fixed.try_emplace("n_bands", "60");
      fixed.try_emplace("freq_win_bands", "6");
      return window_sweep(kind, fixed, 10.0, 1200.0, 32);
    case PerturbationKind::kInterrupt:
      fixed.try_emplace("fraction", "0.5");
      fixed.try_emplace("mode", "silence");
      if (fixed["mode"] == "mask") fixed.try_emplace("snr_db", "-9");
      return window_sweep(kind, fixed, 2.0, 2000.0, 30);
    case PerturbationKind::kWarp: {
      g.kind = kind;
      g.sweep_param = "factor";
      g.log_spaced = true;
      for (double f : log_space(0.25, 4.0, 40)) {
        Params p = fixed;
        p["factor"] = format_number(f);
        g.points.push_back({PerturbationSpec(kind, std::move(p)), f});
      }
      return g;
    }
    case PerturbationKind::kRepackage: {
      fixed.try_emplace("window_ms", "250");
      fixed.try_emplace("factor", "2");
      const double window = std::stod(fixed["window_ms"]);
      const double compression = std::stod(fixed["factor"]);
      g.kind = kind;
      g.sweep_param = "ratio";
      g.log_spaced = true;
      for (double ratio : log_space(0.5, 2.0, 10)) {
        Params p = fixed;
        p["silence_ms"] = format_number(window / compression / ratio);
        g.points.push_back({PerturbationSpec(kind, std::move(p)), ratio});
      }
      return g;
    }
    case PerturbationKind::kChimera: {
      fixed.try_emplace("mode", "speech_env");
      g.kind = kind;
      g.sweep_param = "n_bands";
      for (int bands : {1, 2, 4, 8, 16, 30}) {
        Params p = fixed;
        p["n_bands"] = std::to_string(bands);
        g.points.push_back({PerturbationSpec(kind, std::move(p)), double(bands)});
      }
      return g;
    }
  }
  throw ParameterError("unknown perturbation kind");
}

}  // namespace perturbbench
