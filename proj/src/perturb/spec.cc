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

#include "perturbbench/perturb/spec.h"

#include <array>
#include <charconv>
#include <cmath>
#include <utility>

#include "perturbbench/error.h"

namespace perturbbench {
namespace {

enum class ValueType { kNumber, kPositive, kInteger, kSeed, kChoice };

struct KeySchema {
  std::string_view key;
  ValueType type;
  bool required;
  std::string_view default_value;  // used when optional and absent
  std::vector<std::string_view> choices;
};

struct KindInfo {
  PerturbationKind kind;
  std::string_view name;
  std::vector<KeySchema> keys;
};

const std::vector<KindInfo>& kind_table() {
  static const std::vector<KindInfo> table = {
      {PerturbationKind::kNone, "none", {}},
      {PerturbationKind::kReverse,
       "reverse",
       {{"window_ms", ValueType::kPositive, true, "", {}},
        {"fade_ms", ValueType::kNumber, false, "2", {}}}},
      {PerturbationKind::kShuffle,
       "shuffle",
       {{"window_ms", ValueType::kPositive, true, "", {}},
        {"fade_ms", ValueType::kNumber, false, "2", {}},
        {"seed", ValueType::kSeed, false, "", {}}}},
      {PerturbationKind::kWarp,
       "warp",
       {{"factor", ValueType::kPositive, true, "", {}}}},
      {PerturbationKind::kChimera,
       "chimera",
       {{"n_bands", ValueType::kInteger, true, "", {}},
        {"mode", ValueType::kChoice, false, "speech_env",
         {"speech_env", "speech_tfs"}},
        {"seed", ValueType::kSeed, false, "", {}}}},
      {PerturbationKind::kMosaic,
       "mosaic",
       {{"n_bands", ValueType::kInteger, true, "", {}},
        {"freq_win_bands", ValueType::kInteger, true, "", {}},
        {"window_ms", ValueType::kPositive, true, "", {}},
        {"seed", ValueType::kSeed, false, "", {}}}},
      {PerturbationKind::kInterrupt,
       "interrupt",
       {{"window_ms", ValueType::kPositive, true, "", {}},
        {"fraction", ValueType::kNumber, true, "", {}},
        {"mode", ValueType::kChoice, true, "", {"mask", "silence"}},
        {"snr_db", ValueType::kNumber, false, "", {}},
        {"selection", ValueType::kChoice, false, "periodic",
         {"periodic", "random"}},
        {"seed", ValueType::kSeed, false, "", {}}}},
      {PerturbationKind::kRepackage,
       "repackage",
       {{"window_ms", ValueType::kPositive, true, "", {}},
        {"factor", ValueType::kNumber, true, "", {}},
        {"silence_ms", ValueType::kNumber, true, "", {}},
        {"fade_ms", ValueType::kNumber, false, "2", {}}}},
      {PerturbationKind::kEnvelopeReverse,
       "envelope_reverse",
       {{"n_bands", ValueType::kInteger, true, "", {}},
        {"window_ms", ValueType::kPositive, true, "", {}}}},
  };
  return table;
}

const KindInfo& info(PerturbationKind kind) {
  for (const auto& k : kind_table()) {
    if (k.kind == kind) return k;
  }
  throw ParameterError("unknown perturbation kind");
}

std::optional<double> to_double(std::string_view s) {
  double v = 0.0;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end || !std::isfinite(v)) return std::nullopt;
  return v;
}

std::string normalize_value(std::string_view kind, const KeySchema& schema,
                            std::string_view raw) {
  const std::string where =
      std::string(kind) + "." + std::string(schema.key) + "=" + std::string(raw);
  switch (schema.type) {
    case ValueType::kNumber:
    case ValueType::kPositive: {
      const auto v = to_double(raw);
      if (!v) throw ParameterError("not a number: " + where);
      if (schema.type == ValueType::kPositive && !(*v > 0.0)) {
        throw ParameterError("must be positive: " + where);
      }
      return format_number(*v);
    }
    case ValueType::kInteger: {
      int v = 0;
      const auto [ptr, ec] = std::from_chars(raw.data(), raw.data() + raw.size(), v);
      if (ec != std::errc() || ptr != raw.data() + raw.size()) {
        throw ParameterError("not an integer: " + where);
      }
      return std::to_string(v);
    }
    case ValueType::kSeed: {
      std::uint64_t v = 0;
      const auto [ptr, ec] = std::from_chars(raw.data(), raw.data() + raw.size(), v);
      if (ec != std::errc() || ptr != raw.data() + raw.size()) {
        throw ParameterError("not an unsigned seed: " + where);
      }
      return std::to_string(v);
    }
    case ValueType::kChoice:
      for (auto c : schema.choices) {
        if (c == raw) return std::string(raw);
      }
      throw ParameterError("invalid choice: " + where);
  }
  return std::string(raw);
}

}  // namespace

std::string_view kind_name(PerturbationKind kind) { return info(kind).name; }

PerturbationKind parse_kind(std::string_view name) {
  for (const auto& k : kind_table()) {
    if (k.name == name) return k.kind;
  }
  throw ParameterError("unknown perturbation kind '" + std::string(name) + "'");
}

const std::vector<PerturbationKind>& all_kinds() {
  static const std::vector<PerturbationKind> kinds = [] {
    std::vector<PerturbationKind> out;
    for (const auto& k : kind_table()) out.push_back(k.kind);
    return out;
  }();
  return kinds;
}

std::string format_number(double value) {
  if (value == 0.0) return "0";  // folds -0
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  if (ec != std::errc()) throw Error("number formatting failed");
  return std::string(buf.data(), ptr);
}

PerturbationSpec::PerturbationSpec() : kind_(PerturbationKind::kNone) {}

PerturbationSpec::PerturbationSpec(PerturbationKind kind, Params params)
    : kind_(kind) {
  const KindInfo& ki = info(kind);
  for (const auto& [key, value] : params) {
    bool known = false;
    for (const auto& s : ki.keys) known = known || s.key == key;
    if (!known) {
      throw ParameterError("parameter '" + key + "' is not valid for " +
                           std::string(ki.name));
    }
  }
  for (const auto& s : ki.keys) {
    auto it = params.find(s.key);
    if (it == params.end()) {
      if (s.required) {
        throw ParameterError(std::string(ki.name) + " requires '" +
                             std::string(s.key) + "'");
      }
      if (!s.default_value.empty()) {
        params_.emplace(std::string(s.key), std::string(s.default_value));
      }
      continue;
    }
    params_.emplace(std::string(s.key), normalize_value(ki.name, s, it->second));
  }

  // Cross-field rules.
  auto num = [this](std::string_view k) { return number(k); };
  switch (kind_) {
    case PerturbationKind::kReverse:
    case PerturbationKind::kShuffle:
      if (num("fade_ms") < 0.0) throw ParameterError("fade_ms must be >= 0");
      break;
    case PerturbationKind::kChimera:
    case PerturbationKind::kEnvelopeReverse:
      if (integer("n_bands") < 1) throw ParameterError("n_bands must be >= 1");
      break;
    case PerturbationKind::kMosaic:
      if (integer("n_bands") < 1) throw ParameterError("n_bands must be >= 1");
      if (integer("freq_win_bands") < 1 ||
          integer("freq_win_bands") > integer("n_bands")) {
        throw ParameterError("freq_win_bands must be in [1, n_bands]");
      }
      break;
    case PerturbationKind::kInterrupt: {
      const double f = num("fraction");
      if (f < 0.0 || f > 1.0) throw ParameterError("fraction must be in [0, 1]");
      const bool mask = text("mode") == "mask";
      if (mask && !has("snr_db")) {
        throw ParameterError("interrupt mode=mask requires snr_db");
      }
      if (!mask && has("snr_db")) {
        throw ParameterError("snr_db only applies to interrupt mode=mask");
      }
      break;
    }
    case PerturbationKind::kRepackage:
      if (!(num("factor") > 1.0)) {
        throw ParameterError("repackage compression factor must be > 1");
      }
      if (num("silence_ms") < 0.0) throw ParameterError("silence_ms must be >= 0");
      if (num("fade_ms") < 0.0) throw ParameterError("fade_ms must be >= 0");
      break;
    default:
      break;
  }
}

PerturbationSpec PerturbationSpec::parse(std::string_view text) {
  const auto colon = text.find(':');
  const PerturbationKind kind = parse_kind(text.substr(0, colon));
  Params params;
  if (colon != std::string_view::npos) {
    std::string_view rest = text.substr(colon + 1);
    while (!rest.empty()) {
      const auto semi = rest.find(';');
      const std::string_view pair = rest.substr(0, semi);
      const auto eq = pair.find('=');
      if (eq == std::string_view::npos || eq == 0) {
        throw ParameterError("malformed parameter '" + std::string(pair) +
                             "' in '" + std::string(text) + "'");
      }
      const std::string key(pair.substr(0, eq));
      if (!params.emplace(key, std::string(pair.substr(eq + 1))).second) {
        throw ParameterError("duplicate parameter '" + key + "'");
      }
      if (semi == std::string_view::npos) break;
      rest = rest.substr(semi + 1);
    }
  }
  return PerturbationSpec(kind, std::move(params));
}

std::string PerturbationSpec::canonical() const {
  std::string out(kind_name(kind_));
  char sep = ':';
  for (const auto& [key, value] : params_) {
    out += sep;
    out += key;
    out += '=';
    out += value;
    sep = ';';
  }
  return out;
}

bool PerturbationSpec::has(std::string_view key) const {
  return params_.find(key) != params_.end();
}

const std::string& PerturbationSpec::text(std::string_view key) const {
  const auto it = params_.find(key);
  if (it == params_.end()) {
    throw ParameterError(std::string(kind_name(kind_)) + " has no parameter '" +
                         std::string(key) + "'");
  }
  return it->second;
}

double PerturbationSpec::number(std::string_view key) const {
  return *to_double(text(key));
}

int PerturbationSpec::integer(std::string_view key) const {
  return std::stoi(text(key));
}

std::optional<std::uint64_t> PerturbationSpec::seed() const {
  if (!has("seed")) return std::nullopt;
  return std::stoull(text("seed"));
}

PerturbationSpec PerturbationSpec::with(std::string_view key,
                                        std::string_view value) const {
  Params p = params_;
  p[std::string(key)] = std::string(value);
  return PerturbationSpec(kind_, std::move(p));
}

PerturbationSpec PerturbationSpec::with_seed(std::uint64_t seed) const {
  for (const auto& s : info(kind_).keys) {
    if (s.key == "seed") return with("seed", std::to_string(seed));
  }
  return *this;  // deterministic kinds ignore seeds
}

PerturbationSpec PerturbationSpec::without_seed() const {
  PerturbationSpec copy = *this;
  copy.params_.erase("seed");
  return copy;
}

}  // namespace perturbbench
