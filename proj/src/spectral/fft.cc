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

#include "perturbbench/spectral/fft.h"

#include <fftw3.h>

#include <algorithm>
#include <map>
#include <mutex>
#include <utility>

#include "perturbbench/error.h"

namespace perturbbench {
namespace {

enum class PlanKind { kR2C, kC2R, kC2CForward, kC2CBackward };

// The FFTW planner is not reentrant; execution with the new-array interface
// is. Plans live for the whole process.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

fftw_plan get_plan(PlanKind kind, std::size_t n) {
  static std::map<std::pair<PlanKind, std::size_t>, fftw_plan> cache;
  std::lock_guard lock(planner_mutex());
  const auto key = std::make_pair(kind, n);
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  const int len = static_cast<int>(n);
  const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
  double* real = fftw_alloc_real(n);
  fftw_complex* cplx = fftw_alloc_complex(n);
  fftw_complex* cplx2 = fftw_alloc_complex(n);
  fftw_plan plan = nullptr;
  switch (kind) {
    case PlanKind::kR2C:
      plan = fftw_plan_dft_r2c_1d(len, real, cplx, flags);
      break;
    case PlanKind::kC2R:
      plan = fftw_plan_dft_c2r_1d(len, cplx, real, flags);
      break;
    case PlanKind::kC2CForward:
      plan = fftw_plan_dft_1d(len, cplx, cplx2, FFTW_FORWARD, flags);
      break;
    case PlanKind::kC2CBackward:
      plan = fftw_plan_dft_1d(len, cplx, cplx2, FFTW_BACKWARD, flags);
      break;
  }
  fftw_free(real);
  fftw_free(cplx);
  fftw_free(cplx2);
  if (plan == nullptr) throw Error("FFTW failed to create a plan");
  cache.emplace(key, plan);
  return plan;
}

fftw_complex* as_fftw(Complex* p) { return reinterpret_cast<fftw_complex*>(p); }

void check_size(std::size_t got, std::size_t want) {
  if (got != want) throw ParameterError("FFT buffer size mismatch");
}

}  // namespace

RealFft::RealFft(std::size_t n) : n_(n) {
  if (n == 0) throw ParameterError("FFT size must be positive");
  forward_plan_ = get_plan(PlanKind::kR2C, n);
  inverse_plan_ = get_plan(PlanKind::kC2R, n);
}

void RealFft::forward(std::span<const double> in, std::span<Complex> out) const {
  check_size(in.size(), n_);
  check_size(out.size(), bins());
  // FFTW does not modify the input of an r2c transform.
  fftw_execute_dft_r2c(static_cast<fftw_plan>(forward_plan_),
                       const_cast<double*>(in.data()), as_fftw(out.data()));
}

std::vector<Complex> RealFft::forward(std::span<const double> in) const {
  std::vector<Complex> out(bins());
  forward(in, out);
  return out;
}

void RealFft::inverse(std::span<const Complex> in, std::span<double> out) const {
  check_size(in.size(), bins());
  check_size(out.size(), n_);
  // c2r overwrites its input.
  std::vector<Complex> scratch(in.begin(), in.end());
  fftw_execute_dft_c2r(static_cast<fftw_plan>(inverse_plan_),
                       as_fftw(scratch.data()), out.data());
  const double scale = 1.0 / static_cast<double>(n_);
  for (auto& v : out) v *= scale;
}

ComplexFft::ComplexFft(std::size_t n) : n_(n) {
  if (n == 0) throw ParameterError("FFT size must be positive");
  forward_plan_ = get_plan(PlanKind::kC2CForward, n);
  inverse_plan_ = get_plan(PlanKind::kC2CBackward, n);
}

void ComplexFft::forward(std::span<const Complex> in,
                         std::span<Complex> out) const {
  check_size(in.size(), n_);
  check_size(out.size(), n_);
  // Plans are out-of-place; in-place calls go through a copy.
  std::vector<Complex> scratch;
  const Complex* src = in.data();
  if (src == out.data()) {
    scratch.assign(in.begin(), in.end());
    src = scratch.data();
  }
  fftw_execute_dft(static_cast<fftw_plan>(forward_plan_),
                   as_fftw(const_cast<Complex*>(src)), as_fftw(out.data()));
}

void ComplexFft::inverse(std::span<const Complex> in,
                         std::span<Complex> out) const {
  check_size(in.size(), n_);
  check_size(out.size(), n_);
  std::vector<Complex> scratch;
  const Complex* src = in.data();
  if (src == out.data()) {
    scratch.assign(in.begin(), in.end());
    src = scratch.data();
  }
  fftw_execute_dft(static_cast<fftw_plan>(inverse_plan_),
                   as_fftw(const_cast<Complex*>(src)), as_fftw(out.data()));
  const double scale = 1.0 / static_cast<double>(n_);
  for (auto& v : out) v *= scale;
}

std::size_t next_fast_size(std::size_t n) {
  if (n <= 1) return 1;
  for (std::size_t m = n;; ++m) {
    std::size_t r = m;
    for (std::size_t p : {2, 3, 5, 7}) {
      while (r % p == 0) r /= p;
    }
    if (r == 1) return m;
  }
}

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

}  // namespace perturbbench
