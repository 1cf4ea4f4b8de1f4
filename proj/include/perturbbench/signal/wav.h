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

#ifndef PERTURBBENCH_SIGNAL_WAV_H_
#define PERTURBBENCH_SIGNAL_WAV_H_

#include <filesystem>

#include "perturbbench/signal/audio.h"

namespace perturbbench {

enum class SampleEncoding {
  kPcm16,
  kFloat32,
  kFloat64,  // lossless for any finite double
};

// Reads a mono RIFF/WAVE file holding PCM16 or IEEE float (32 or 64 bit)
// samples. WAVE_FORMAT_EXTENSIBLE headers are accepted. PCM16 is scaled by
// 1/32768.
//
// Throws ChannelCountError for multichannel files, FormatError for any other
// encoding or a malformed header, IoError when the file cannot be read.
AudioSignal load_wav(const std::filesystem::path& path);

// PCM16 output rounds to the nearest step and saturates at full scale.
void save_wav(const AudioSignal& signal, const std::filesystem::path& path,
              SampleEncoding encoding = SampleEncoding::kFloat32);

}  // namespace perturbbench

#endif  // PERTURBBENCH_SIGNAL_WAV_H_
