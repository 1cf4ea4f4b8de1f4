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

#ifndef PERTURBBENCH_HARNESS_GRID_H_
#define PERTURBBENCH_HARNESS_GRID_H_

#include <map>
#include <string>
#include <vector>

#include "perturbbench/perturb/spec.h"

namespace perturbbench {

struct GridPoint {
  PerturbationSpec spec;
  // Value of the swept parameter. For repackaging this is the
  // audio-to-silence duration ratio (window / compression) / silence.
  double param_value = 0.0;
};

struct ExperimentGrid {
  PerturbationKind kind = PerturbationKind::kNone;
  std::string sweep_param;  // key varied across points ("ratio" for repackage)
  bool log_spaced = false;
  std::vector<GridPoint> points;
};

// n points from first to last, evenly spaced in log; endpoints exact.
std::vector<double> log_space(double first, double last, int n);

// Fixed parameters applied to every point of a grid, e.g. {"mode", "mask"}.
using GridOverrides = std::map<std::string, std::string>;

// Experimental sweep for one perturbation kind:
//   reverse, shuffle   58 windows, 0.125 - 1200 ms
//   envelope_reverse   32 windows, 10 - 1200 ms, 30 bands
//   mosaic             32 windows, 10 - 1200 ms, 60 bands, 6-band cells
//   interrupt          30 windows, 2 - 2000 ms, fraction 0.5, silence
//                      (mode=mask defaults to snr_db=-9)
//   warp               40 factors, 0.25 - 4
//   repackage          10 audio:silence ratios, 0.5 - 2, compression 2,
//                      250 ms windows
//   chimera            bands {1, 2, 4, 8, 16, 30}, speech envelopes
//   none               one identity point
// Throws ParameterError if an override targets the swept parameter or makes
// a point invalid.
ExperimentGrid build_grid(PerturbationKind kind,
                          const GridOverrides& overrides = {});

// The parameter key that a grid for `kind` varies ("silence_ms" for repackage,
// empty for none).
std::string sweep_key(PerturbationKind kind);

}  // namespace perturbbench

#endif  // PERTURBBENCH_HARNESS_GRID_H_
