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

#ifndef PERTURBBENCH_PERTURB_SPEC_H_
#define PERTURBBENCH_PERTURB_SPEC_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace perturbbench {

enum class PerturbationKind {
  kNone,
  kReverse,
  kShuffle,
  kWarp,
  kChimera,
  kMosaic,
  kInterrupt,
  kRepackage,
  kEnvelopeReverse,
};

std::string_view kind_name(PerturbationKind kind);
// Throws ParameterError for an unknown name.
PerturbationKind parse_kind(std::string_view name);
const std::vector<PerturbationKind>& all_kinds();

// One perturbation plus its parameters.
//
// Every kind has a fixed schema of required and optional keys; optional keys
// receive their defaults on construction so that equal perturbations have a
// single canonical text. `seed` is the exception: it is only present when
// set explicitly (the harness derives it per utterance).
//
// Canonical text: "<kind>" followed, when there are parameters, by ':' and
// the key=value pairs sorted by key and joined with ';'. Numbers use the
// shortest representation that round-trips, e.g.
//   "reverse:fade_ms=2;window_ms=150"
//   "interrupt:fraction=0.5;mode=mask;selection=periodic;snr_db=-9;window_ms=300"
class PerturbationSpec {
 public:
  using Params = std::map<std::string, std::string, std::less<>>;

  // Identity perturbation.
  PerturbationSpec();

  // Validates params against the kind's schema and fills defaults.
  // Throws ParameterError on unknown, missing, or malformed parameters.
  PerturbationSpec(PerturbationKind kind, Params params);

  // Parses canonical (or any key-order) text. Throws ParameterError.
  static PerturbationSpec parse(std::string_view text);

  PerturbationKind kind() const { return kind_; }
  const Params& params() const { return params_; }
  std::string canonical() const;

  bool has(std::string_view key) const;
  double number(std::string_view key) const;
  int integer(std::string_view key) const;
  const std::string& text(std::string_view key) const;
  std::optional<std::uint64_t> seed() const;

  // Copy with `key` set (and revalidated).
  PerturbationSpec with(std::string_view key, std::string_view value) const;
  PerturbationSpec with_seed(std::uint64_t seed) const;
  PerturbationSpec without_seed() const;

  friend bool operator==(const PerturbationSpec&,
                         const PerturbationSpec&) = default;

 private:
  PerturbationKind kind_;
  Params params_;
};

// Shortest round-trip decimal text for a double.
std::string format_number(double value);

}  // namespace perturbbench

#endif  // PERTURBBENCH_PERTURB_SPEC_H_
