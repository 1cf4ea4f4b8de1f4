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

#ifndef PERTURBBENCH_SIGNAL_NOISE_H_
#define PERTURBBENCH_SIGNAL_NOISE_H_

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace perturbbench {

// 64-bit FNV-1a. Stable across platforms and runs, used for seed derivation
// and cache file names.
std::uint64_t stable_hash(std::string_view text,
                          std::uint64_t basis = 0xcbf29ce484222325ULL);

// Seed for one (utterance, perturbation) pair of a corpus run. Independent of
// scheduling order.
std::uint64_t derive_seed(std::uint64_t corpus_seed,
                          std::string_view utterance_id,
                          std::string_view canonical_spec);

// Mixes a stream index into a seed (splitmix64 finalizer), for independent
// per-band or per-frame streams.
std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t stream);

// Standard normal samples from a seeded generator.
std::vector<double> gaussian_noise(std::size_t n, std::uint64_t seed);

}  // namespace perturbbench

#endif  // PERTURBBENCH_SIGNAL_NOISE_H_
