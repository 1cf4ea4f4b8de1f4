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


#ifndef PERTURBBENCH_HARNESS_PLOT_H_
#define PERTURBBENCH_HARNESS_PLOT_H_

#include <filesystem>
#include <optional>
#include <string>

namespace perturbbench {

enum class AxisScale { kAuto, kLinear, kLog };

struct AxisSpec {
  AxisScale x_scale = AxisScale::kAuto;  // auto: log if x spans > 1 decade
  // Unset: reversed (0 at the top) for repackaging summaries only.
  std::optional<bool> reverse_y;
  std::string title;   // defaults to the perturbation kind
  std::string x_label; // defaults to the swept parameter
  std::string y_label = "WER";
};

// Renders summary.csv as an SVG: one curve per series (points whose specs
// agree outside the swept parameter), a shaded 95% CI band, and markers.
// Rows with NaN mean WER are skipped. Output is byte-deterministic.
// Throws ParseError for a malformed summary, IoError on write failure.
void emit_curves(const std::filesystem::path& summary_csv,
                 const std::filesystem::path& out_svg,
                 const AxisSpec& axes = {});

}  // namespace perturbbench

#endif  // PERTURBBENCH_HARNESS_PLOT_H_
