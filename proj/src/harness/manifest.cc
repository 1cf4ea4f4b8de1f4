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

#include "perturbbench/harness/manifest.h"

#include <fstream>
#include <set>

#include <json.hpp>

#include "perturbbench/error.h"

namespace perturbbench {
namespace {

std::string json_field(const nlohmann::json& obj, const char* key,
                       std::size_t line) {
  const auto it = obj.find(key);
  if (it == obj.end() || !it->is_string()) {
    throw ManifestError(line, std::string("missing string field \"") + key + "\"");
  }
  return it->get<std::string>();
}

}  // namespace

std::vector<ManifestEntry> load_manifest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open manifest " + path.string());
  const auto base = std::filesystem::absolute(path).parent_path();

  std::vector<ManifestEntry> entries;
  std::set<std::string> seen;
  std::string text;
  for (std::size_t line = 1; std::getline(in, text); ++line) {
    if (!text.empty() && text.back() == '\r') text.pop_back();
    if (text.find_first_not_of(" \t") == std::string::npos) continue;

    ManifestEntry e;
    const auto first = text.find_first_not_of(" \t");
    if (text[first] == '{') {
      nlohmann::json obj;
      try {
        obj = nlohmann::json::parse(text);
      } catch (const nlohmann::json::exception& ex) {
        throw ManifestError(line, std::string("invalid JSON: ") + ex.what());
      }
      if (!obj.is_object()) throw ManifestError(line, "expected a JSON object");
      e.utterance_id = json_field(obj, "id", line);
      e.audio_path = json_field(obj, "audio", line);
      e.reference = json_field(obj, "text", line);
    } else {
      const auto t1 = text.find('\t');
      const auto t2 = t1 == std::string::npos ? t1 : text.find('\t', t1 + 1);
      if (t2 == std::string::npos) {
        throw ManifestError(line, "expected 3 tab-separated fields");
      }
      if (text.find('\t', t2 + 1) != std::string::npos) {
        throw ManifestError(line, "more than 3 tab-separated fields");
      }
      e.utterance_id = text.substr(0, t1);
      e.audio_path = text.substr(t1 + 1, t2 - t1 - 1);
      e.reference = text.substr(t2 + 1);
    }
    if (e.utterance_id.empty()) throw ManifestError(line, "empty utterance id");
    if (e.audio_path.empty()) throw ManifestError(line, "empty audio path");
    if (!seen.insert(e.utterance_id).second) {
      throw ManifestError(line, "duplicate utterance id '" + e.utterance_id + "'");
    }
    if (e.audio_path.is_relative()) e.audio_path = base / e.audio_path;
    e.audio_path = e.audio_path.lexically_normal();
    entries.push_back(std::move(e));
  }
  return entries;
}

}  // namespace perturbbench
