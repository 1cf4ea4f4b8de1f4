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

#ifndef PERTURBBENCH_HARNESS_MANIFEST_H_
#define PERTURBBENCH_HARNESS_MANIFEST_H_

#include <filesystem>
#include <string>
#include <vector>

namespace perturbbench {

struct ManifestEntry {
  std::string utterance_id;
  std::filesystem::path audio_path;  // absolute after loading
  std::string reference;

  friend bool operator==(const ManifestEntry&, const ManifestEntry&) = default;
};

// One record per line, either JSON ({"id", "audio", "text"}) or three
// tab-separated columns (id, audio path, reference); the format is detected
// per line. Blank lines are skipped and relative audio paths resolve against
// the manifest's directory. Throws ManifestError naming the line for missing
// fields or duplicate ids, IoError when the file cannot be read.
std::vector<ManifestEntry> load_manifest(const std::filesystem::path& path);

}  // namespace perturbbench

#endif  // PERTURBBENCH_HARNESS_MANIFEST_H_
