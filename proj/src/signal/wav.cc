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

#include "perturbbench/signal/wav.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <iterator>
#include <string>
#include <vector>

#include "perturbbench/error.h"

namespace perturbbench {
namespace {

constexpr std::uint16_t kFormatPcm = 1;
constexpr std::uint16_t kFormatFloat = 3;
constexpr std::uint16_t kFormatExtensible = 0xFFFE;

std::uint16_t read_u16(const unsigned char* p) {
  return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

std::uint32_t read_u32(const unsigned char* p) {
  return static_cast<std::uint32_t>(p[0]) |
         (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) |
         (static_cast<std::uint32_t>(p[3]) << 24);
}

std::uint64_t read_u64(const unsigned char* p) {
  return static_cast<std::uint64_t>(read_u32(p)) |
         (static_cast<std::uint64_t>(read_u32(p + 4)) << 32);
}

void put_u16(std::vector<unsigned char>& out, std::uint16_t v) {
  out.push_back(static_cast<unsigned char>(v & 0xFF));
  out.push_back(static_cast<unsigned char>(v >> 8));
}

void put_u32(std::vector<unsigned char>& out, std::uint32_t v) {
  for (int shift = 0; shift < 32; shift += 8) {
    out.push_back(static_cast<unsigned char>((v >> shift) & 0xFF));
  }
}

void put_u64(std::vector<unsigned char>& out, std::uint64_t v) {
  put_u32(out, static_cast<std::uint32_t>(v & 0xFFFFFFFFu));
  put_u32(out, static_cast<std::uint32_t>(v >> 32));
}

void put_tag(std::vector<unsigned char>& out, const char* tag) {
  out.insert(out.end(), tag, tag + 4);
}

struct FormatChunk {
  std::uint16_t format = 0;
  std::uint16_t channels = 0;
  std::uint32_t sample_rate = 0;
  std::uint16_t bits = 0;
};

}  // namespace

AudioSignal load_wav(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  const std::vector<unsigned char> bytes{std::istreambuf_iterator<char>(in),
                                         std::istreambuf_iterator<char>()};
  const std::string name = path.string();
  if (bytes.size() < 12 || std::memcmp(bytes.data(), "RIFF", 4) != 0 ||
      std::memcmp(bytes.data() + 8, "WAVE", 4) != 0) {
    throw FormatError(name + ": not a RIFF/WAVE file");
  }

  FormatChunk fmt;
  bool have_fmt = false;
  const unsigned char* data = nullptr;
  std::size_t data_size = 0;
  std::size_t pos = 12;
  while (pos + 8 <= bytes.size()) {
    const unsigned char* chunk = bytes.data() + pos;
    const std::size_t size = read_u32(chunk + 4);
    const std::size_t body = pos + 8;
    const std::size_t available = bytes.size() - body;
    if (std::memcmp(chunk, "fmt ", 4) == 0) {
      if (size < 16 || size > available) {
        throw FormatError(name + ": truncated fmt chunk");
      }
      const unsigned char* p = bytes.data() + body;
      fmt.format = read_u16(p);
      fmt.channels = read_u16(p + 2);
      fmt.sample_rate = read_u32(p + 4);
      fmt.bits = read_u16(p + 14);
      if (fmt.format == kFormatExtensible) {
        if (size < 40) throw FormatError(name + ": truncated extensible fmt");
        // First two bytes of the sub-format GUID carry the real format tag.
        fmt.format = read_u16(p + 24);
      }
      have_fmt = true;
    } else if (std::memcmp(chunk, "data", 4) == 0) {
      data = bytes.data() + body;
      data_size = std::min(size, available);
    }
    pos = body + size + (size & 1);
  }
  if (!have_fmt) throw FormatError(name + ": missing fmt chunk");
  if (data == nullptr) throw FormatError(name + ": missing data chunk");
  if (fmt.channels != 1) {
    throw ChannelCountError(name + ": expected mono audio, found " +
                            std::to_string(fmt.channels) + " channels");
  }
  if (fmt.sample_rate == 0) throw FormatError(name + ": zero sample rate");

  std::vector<double> samples;
  if (fmt.format == kFormatPcm && fmt.bits == 16) {
    samples.resize(data_size / 2);
    for (std::size_t i = 0; i < samples.size(); ++i) {
      const auto v = static_cast<std::int16_t>(read_u16(data + 2 * i));
      samples[i] = static_cast<double>(v) / 32768.0;
    }
  } else if (fmt.format == kFormatFloat && fmt.bits == 32) {
    samples.resize(data_size / 4);
    for (std::size_t i = 0; i < samples.size(); ++i) {
      samples[i] = std::bit_cast<float>(read_u32(data + 4 * i));
    }
  } else if (fmt.format == kFormatFloat && fmt.bits == 64) {
    samples.resize(data_size / 8);
    for (std::size_t i = 0; i < samples.size(); ++i) {
      samples[i] = std::bit_cast<double>(read_u64(data + 8 * i));
    }
  } else {
    throw FormatError(name + ": unsupported encoding (format tag " +
                      std::to_string(fmt.format) + ", " +
                      std::to_string(fmt.bits) + " bits)");
  }
  return AudioSignal(std::move(samples), static_cast<int>(fmt.sample_rate));
}

void save_wav(const AudioSignal& signal, const std::filesystem::path& path,
              SampleEncoding encoding) {
  std::uint16_t format = kFormatFloat;
  std::uint16_t bits = 32;
  switch (encoding) {
    case SampleEncoding::kPcm16:
      format = kFormatPcm;
      bits = 16;
      break;
    case SampleEncoding::kFloat32:
      break;
    case SampleEncoding::kFloat64:
      bits = 64;
      break;
  }
  const std::uint32_t block_align = bits / 8;
  const std::uint32_t data_size =
      static_cast<std::uint32_t>(signal.size() * block_align);
  const auto rate = static_cast<std::uint32_t>(signal.sample_rate());

  std::vector<unsigned char> out;
  out.reserve(44 + data_size);
  put_tag(out, "RIFF");
  put_u32(out, 36 + data_size);
  put_tag(out, "WAVE");
  put_tag(out, "fmt ");
  put_u32(out, 16);
  put_u16(out, format);
  put_u16(out, 1);
  put_u32(out, rate);
  put_u32(out, rate * block_align);
  put_u16(out, static_cast<std::uint16_t>(block_align));
  put_u16(out, bits);
  put_tag(out, "data");
  put_u32(out, data_size);
  for (double x : signal.samples()) {
    switch (encoding) {
      case SampleEncoding::kPcm16: {
        const double q = std::clamp(std::round(x * 32768.0), -32768.0, 32767.0);
        put_u16(out, static_cast<std::uint16_t>(static_cast<std::int16_t>(q)));
        break;
      }
      case SampleEncoding::kFloat32:
        put_u32(out, std::bit_cast<std::uint32_t>(static_cast<float>(x)));
        break;
      case SampleEncoding::kFloat64:
        put_u64(out, std::bit_cast<std::uint64_t>(x));
        break;
    }
  }

  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot write " + path.string());
  file.write(reinterpret_cast<const char*>(out.data()),
             static_cast<std::streamsize>(out.size()));
  if (!file) throw IoError("write failed for " + path.string());
}

}  // namespace perturbbench
