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

#ifndef PERTURBBENCH_SPECTRAL_FFT_H_
#define PERTURBBENCH_SPECTRAL_FFT_H_

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace perturbbench {

using Complex = std::complex<double>;

// Thin wrapper over FFTW plans. Plans are created once per size under a
// global lock and shared; executing them is thread-safe, so instances may be
// used concurrently from different threads.
class RealFft {
 public:
  explicit RealFft(std::size_t n);

  std::size_t size() const { return n_; }
  std::size_t bins() const { return n_ / 2 + 1; }

  // in.size() == size(), out.size() == bins().
  void forward(std::span<const double> in, std::span<Complex> out) const;
  // Normalized inverse: inverse(forward(x)) == x.
  void inverse(std::span<const Complex> in, std::span<double> out) const;

  std::vector<Complex> forward(std::span<const double> in) const;

 private:
  std::size_t n_;
  void* forward_plan_;
  void* inverse_plan_;
};

class ComplexFft {
 public:
  explicit ComplexFft(std::size_t n);

  std::size_t size() const { return n_; }
  void forward(std::span<const Complex> in, std::span<Complex> out) const;
  // Normalized by 1/n.
  void inverse(std::span<const Complex> in, std::span<Complex> out) const;

 private:
  std::size_t n_;
  void* forward_plan_;
  void* inverse_plan_;
};

// Smallest integer >= n whose prime factors are all in {2, 3, 5, 7}.
std::size_t next_fast_size(std::size_t n);

std::size_t next_pow2(std::size_t n);

}  // namespace perturbbench

#endif  // PERTURBBENCH_SPECTRAL_FFT_H_
