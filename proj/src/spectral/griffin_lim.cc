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

#include "perturbbench/spectral/griffin_lim.h"

#include <cmath>
#include <numbers>
#include <random>

#include "perturbbench/error.h"

namespace perturbbench {
namespace {

double consistency_residual(const Matrix<Complex>& estimate,
                            const Matrix<double>& magnitude,
                            std::size_t fft_size) {
  const std::size_t bins = magnitude.cols();
  double acc = 0.0;
  for (std::size_t t = 0; t < magnitude.rows(); ++t) {
    for (std::size_t k = 0; k < bins; ++k) {
      const double d = std::abs(estimate(t, k)) - magnitude(t, k);
      // One-sided bins other than DC (and Nyquist for even sizes) stand for
      // a conjugate pair.
      const bool single = k == 0 || (fft_size % 2 == 0 && k == bins - 1);
      acc += (single ? 1.0 : 2.0) * d * d;
    }
  }
  return std::sqrt(acc);
}

Matrix<Complex> combine(const Matrix<double>& magnitude,
                        const Matrix<Complex>& phase_source) {
  Matrix<Complex> out(magnitude.rows(), magnitude.cols());
  for (std::size_t i = 0; i < out.data().size(); ++i) {
    const Complex z = phase_source.data()[i];
    const double r = std::abs(z);
    out.data()[i] = r > 0.0 ? magnitude.data()[i] * (z / r)
                            : Complex(magnitude.data()[i], 0.0);
  }
  return out;
}

}  // namespace

GriffinLimResult griffin_lim(const Matrix<double>& magnitude,
                             const std::optional<Matrix<double>>& init_phase,
                             int iterations, const StftConfig& config,
                             int sample_rate, std::size_t output_len,
                             std::uint64_t seed) {
  config.validate();
  if (iterations < 0) throw ParameterError("iterations must be >= 0");
  if (magnitude.rows() == 0) throw ParameterError("empty magnitude matrix");
  if (magnitude.cols() != config.bins()) {
    throw ParameterError("magnitude bin count does not match fft_size");
  }
  for (double m : magnitude.data()) {
    if (!(m >= 0.0) || !std::isfinite(m)) {
      throw ParameterError("magnitude must be finite and non-negative");
    }
  }
  if (init_phase && (init_phase->rows() != magnitude.rows() ||
                     init_phase->cols() != magnitude.cols())) {
    throw ParameterError("init_phase shape differs from magnitude");
  }

  Matrix<Complex> estimate(magnitude.rows(), magnitude.cols());
  if (init_phase) {
    for (std::size_t i = 0; i < estimate.data().size(); ++i) {
      estimate.data()[i] =
          std::polar(magnitude.data()[i], init_phase->data()[i]);
    }
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> angle(-std::numbers::pi,
                                                 std::numbers::pi);
    for (std::size_t i = 0; i < estimate.data().size(); ++i) {
      estimate.data()[i] = std::polar(magnitude.data()[i], angle(rng));
    }
  }

  std::vector<double> buffer = detail::synthesize_buffer(estimate, config);
  std::vector<double> residuals;
  residuals.reserve(iterations + 1);
  Matrix<Complex> analysis = detail::analyze_buffer(buffer, config);
  residuals.push_back(consistency_residual(analysis, magnitude, config.fft_size));
  for (int k = 0; k < iterations; ++k) {
    buffer = detail::synthesize_buffer(combine(magnitude, analysis), config);
    analysis = detail::analyze_buffer(buffer, config);
    residuals.push_back(consistency_residual(analysis, magnitude, config.fft_size));
  }

  std::vector<double> out(output_len, 0.0);
  const std::size_t pad = config.front_pad();
  for (std::size_t i = 0; i < output_len && pad + i < buffer.size(); ++i) {
    out[i] = buffer[pad + i];
  }
  return {AudioSignal(std::move(out), sample_rate), std::move(residuals)};
}

}  // namespace perturbbench
