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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "perturbbench/cochlear/chimera.h"
#include "perturbbench/cochlear/filterbank.h"
#include "perturbbench/error.h"
#include "perturbbench/signal/noise.h"
#include "test_support.h"

namespace perturbbench {
namespace {

TEST(Erb, KnownBandwidths) {
  // 24.7 * (4.37 f / 1000 + 1)
  EXPECT_NEAR(erb_bandwidth_hz(1000.0), 132.639, 1e-9);
  EXPECT_NEAR(erb_bandwidth_hz(0.0), 24.7, 1e-12);
  for (double f : {80.0, 500.0, 3000.0, 8000.0}) {
    EXPECT_NEAR(erb_rate_to_hz(erb_rate(f)), f, 1e-9);
  }
}

TEST(Erb, CenterFrequenciesSpanRangeAndIncrease) {
  for (int n = 1; n <= 64; ++n) {
    const auto fc = erb_center_frequencies(n, 16000);
    ASSERT_EQ(fc.size(), static_cast<std::size_t>(n));
    for (int k = 1; k < n; ++k) EXPECT_GT(fc[k], fc[k - 1]);
    if (n > 1) {
      EXPECT_DOUBLE_EQ(fc.front(), 80.0);
      EXPECT_DOUBLE_EQ(fc.back(), 7600.0);  // 0.95 * Nyquist
      // Equal steps on the ERB-rate scale.
      const double step = erb_rate(fc[1]) - erb_rate(fc[0]);
      for (int k = 2; k < n; ++k) {
        EXPECT_NEAR(erb_rate(fc[k]) - erb_rate(fc[k - 1]), step, 1e-9);
      }
    }
  }
  EXPECT_DOUBLE_EQ(erb_center_frequencies(2, 44100).back(), 8000.0);
  EXPECT_NEAR(erb_rate(erb_center_frequencies(1, 16000)[0]),
              (erb_rate(80.0) + erb_rate(7600.0)) / 2, 1e-9);
}

TEST(ErbFilterbank, ResponsesPartitionUnityInsideRange) {
  for (int n : {1, 8, 30, 60}) {
    const ErbFilterbank bank(n, 16000, 4096);
    for (std::size_t j = 0; j < 2049; ++j) {
      const double f = j * 16000.0 / 4096;
      double sum = 0;
      for (int k = 0; k < n; ++k) {
        EXPECT_GE(bank.response(k)[j], 0.0);
        sum += bank.response(k)[j];
      }
      if (f >= 80 && f <= 7600) {
        EXPECT_NEAR(sum, 1.0, 1e-12) << n << " " << f;
      }
      EXPECT_LE(sum, 1.0 + 1e-12);
    }
  }
}

TEST(Filterbank, RejectsBadBandCount) {
  EXPECT_THROW(erb_filterbank(testing::white_noise(100, 1), 0), ParameterError);
}

TEST(Filterbank, SingleBandIsWideband) {
  const auto x = testing::speech_recordings()[0].signal;
  const auto cg = erb_filterbank(x, 1);
  ASSERT_EQ(cg.n_bands(), 1u);
  EXPECT_EQ(cg.length(), x.size());
  EXPECT_GE(correlation(cg.subbands[0], x.samples()), 0.9);
}

TEST(Filterbank, SumReconstructsSpeechAndNoise) {
  std::vector<AudioSignal> inputs = {testing::white_noise(16000, 3)};
  for (const auto& r : testing::speech_recordings()) inputs.push_back(r.signal);
  inputs.resize(5, inputs[0]);
  for (int n : {1, 2, 4, 8, 16, 30, 60}) {
    for (const auto& x : inputs) {
      const auto cg = erb_filterbank(x, n);
      ASSERT_EQ(cg.n_bands(), static_cast<std::size_t>(n));
      ASSERT_EQ(cg.center_freqs.size(), static_cast<std::size_t>(n));
      const auto y = reconstruct(cg);
      EXPECT_GE(correlation(y.samples(), x.samples()), 0.9) << n;
    }
  }
}

TEST(Filterbank, BandsAreTimeAligned) {
  // A click analyzed by zero-phase filters peaks at the click in every band.
  std::vector<double> x(8000, 0.0);
  x[4000] = 1.0;
  const auto cg = erb_filterbank(AudioSignal(x, 16000), 16);
  for (const auto& band : cg.subbands) {
    const auto peak = std::max_element(band.begin(), band.end()) - band.begin();
    EXPECT_EQ(peak, 4000);
  }
}

TEST(EnvelopeTfs, ProductReproducesSubband) {
  const auto cg = erb_filterbank(testing::speech_recordings()[3].signal, 30);
  for (const auto& band : cg.subbands) {
    const auto p = envelope_tfs(band);
    const double peak = *std::max_element(p.envelope.begin(), p.envelope.end());
    std::size_t checked = 0;
    for (std::size_t i = 0; i < band.size(); ++i) {
      EXPECT_GE(p.envelope[i], 0.0);
      if (p.envelope[i] > kEnvelopeEpsilon * peak) {
        ASSERT_NEAR(p.envelope[i] * p.fine_structure[i], band[i],
                    4 * std::numeric_limits<double>::epsilon() * std::abs(band[i]));
        ASSERT_LE(std::abs(p.fine_structure[i]), 1.0 + 1e-12);
        ++checked;
      } else {
        EXPECT_EQ(p.fine_structure[i], 0.0);
      }
    }
    EXPECT_GT(checked, band.size() / 2);
  }
}

TEST(EnvelopeTfs, ToneEnvelopeIsFlat) {
  const auto x = testing::sine(1000, 1000, 16000, 0.3);
  const auto p = envelope_tfs(x.samples());
  const std::size_t trim = x.size() / 10;
  for (std::size_t i = trim; i < x.size() - trim; ++i) {
    ASSERT_NEAR(p.envelope[i], 0.3, 0.003) << i;
  }
}

TEST(EnvelopeTfs, ZeroInput) {
  const std::vector<double> z(100, 0.0);
  const auto p = envelope_tfs(z);
  EXPECT_EQ(p.envelope, z);
  EXPECT_EQ(p.fine_structure, z);
}

TEST(Chimera, IdentityChimeraCorrelates) {
  const auto recs = testing::speech_recordings();
  for (int n : {8, 16, 30, 60}) {
    for (std::size_t r = 0; r < 3; ++r) {
      const auto& x = recs[r].signal;
      const auto y = chimerize(x, x, n);
      ASSERT_EQ(y.size(), x.size());
      EXPECT_GE(correlation(y.samples(), x.samples()), 0.9) << n;
    }
  }
}

TEST(Chimera, RateMismatchAndPadding) {
  const auto a = testing::white_noise(1000, 1, 16000);
  const auto b = testing::white_noise(1500, 2, 8000);
  EXPECT_THROW(chimerize(a, b, 4), ParameterError);
  const auto c = testing::white_noise(1500, 2, 16000);
  EXPECT_EQ(chimerize(a, c, 4).size(), 1500u);
  EXPECT_EQ(chimerize(c, a, 4).size(), 1500u);
  EXPECT_THROW(chimerize(a, a, 0), ParameterError);
}

TEST(Chimera, CarriesEnvelopeOfFirstSource) {
  // Envelope source: a 4 Hz amplitude-modulated tone. Fine-structure source:
  // noise. The chimera's broadband envelope follows the modulation.
  const int rate = 16000;
  std::vector<double> am(rate), mod(rate);
  for (int i = 0; i < rate; ++i) {
    mod[i] = 0.5 * (1 - std::cos(2 * M_PI * 4 * i / rate));
    am[i] = mod[i] * std::sin(2 * M_PI * 1000.0 * i / rate);
  }
  const auto y = chimerize(AudioSignal(am, rate), testing::white_noise(rate, 9), 8);
  // 10 ms RMS profile of y vs the modulator.
  std::vector<double> prof, want;
  for (int t = 0; t + 160 <= rate; t += 160) {
    double e = 0, m = 0;
    for (int i = t; i < t + 160; ++i) {
      e += y[i] * y[i];
      m += mod[i];
    }
    prof.push_back(std::sqrt(e / 160));
    want.push_back(m / 160);
  }
  EXPECT_GE(correlation(prof, want), 0.9);
}

TEST(ReverseEnvelopes, TinyWindowIsNearIdentity) {
  const auto x = testing::speech_recordings()[1].signal;
  const auto y = reverse_envelopes(x, 30, 1000.0 / 16000);
  EXPECT_GE(correlation(y.samples(), x.samples()), 0.9);
}

TEST(ReverseEnvelopes, WholeWindowReversesEnvelopesOnly) {
  // Rising-amplitude chirp: after global envelope reversal the amplitude
  // falls while the carrier still sweeps upward.
  const int rate = 16000, n = 16000;
  std::vector<double> x(n), want(n);
  for (int i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) / rate;
    const double c = std::sin(2 * M_PI * (400.0 * t + 300.0 * t * t));
    x[i] = (0.1 + 0.9 * i / n) * c;
    want[i] = (0.1 + 0.9 * (n - 1 - i) / n) * c;
  }
  const auto y = reverse_envelopes(AudioSignal(x, rate), 8, 2000);
  EXPECT_GE(correlation(y.samples(), want), 0.9);
  // Not a plain time reversal of the waveform.
  std::vector<double> rev(x.rbegin(), x.rend());
  EXPECT_LT(std::abs(correlation(y.samples(), rev)), 0.5);
}

TEST(Pixelate, CellRmsReplicated) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 2.0);
  std::vector<std::vector<double>> env(7, std::vector<double>(53));
  for (auto& b : env) for (auto& v : b) v = u(rng);
  const auto out = pixelate_envelopes(env, 3, 10);
  for (int b0 = 0; b0 < 7; b0 += 3) {
    for (std::size_t t0 = 0; t0 < 53; t0 += 10) {
      const int b1 = std::min(7, b0 + 3);
      const std::size_t t1 = std::min<std::size_t>(53, t0 + 10);
      double acc = 0;
      for (int b = b0; b < b1; ++b)
        for (std::size_t t = t0; t < t1; ++t) acc += env[b][t] * env[b][t];
      const double rms = std::sqrt(acc / ((b1 - b0) * (t1 - t0)));
      for (int b = b0; b < b1; ++b)
        for (std::size_t t = t0; t < t1; ++t) {
          EXPECT_NEAR(out[b][t], rms, 1e-12 * rms);
        }
    }
  }
}

TEST(Pixelate, InvariantToWithinCellPermutation) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<std::vector<double>> env(6, std::vector<double>(40));
  for (auto& b : env) for (auto& v : b) v = u(rng);
  auto perm = env;
  // Swap values across bands and times inside each 2-band x 8-sample cell.
  for (int b0 = 0; b0 < 6; b0 += 2) {
    for (std::size_t t0 = 0; t0 < 40; t0 += 8) {
      std::vector<double*> cell;
      for (int b = b0; b < b0 + 2; ++b)
        for (std::size_t t = t0; t < t0 + 8; ++t) cell.push_back(&perm[b][t]);
      std::vector<double> vals;
      for (auto* p : cell) vals.push_back(*p);
      std::shuffle(vals.begin(), vals.end(), rng);
      for (std::size_t i = 0; i < cell.size(); ++i) *cell[i] = vals[i];
    }
  }
  const auto a = pixelate_envelopes(env, 2, 8);
  const auto b = pixelate_envelopes(perm, 2, 8);
  for (int k = 0; k < 6; ++k)
    for (std::size_t t = 0; t < 40; ++t) EXPECT_NEAR(a[k][t], b[k][t], 1e-12);
}

TEST(Mosaic, ValidatesArguments) {
  const auto x = testing::white_noise(1000, 1);
  EXPECT_THROW(mosaicize(x, 6, 7, 100, 0), ParameterError);
  EXPECT_THROW(mosaicize(x, 6, 0, 100, 0), ParameterError);
  EXPECT_THROW(mosaicize(x, 6, 2, 0, 0), ParameterError);
  EXPECT_THROW(mosaicize(x, 0, 1, 100, 0), ParameterError);
}

TEST(Mosaic, SeededAndLengthPreserving) {
  const auto x = testing::speech_recordings()[0].signal;
  const auto a = mosaicize(x, 60, 6, 100, 5);
  EXPECT_EQ(a.size(), x.size());
  EXPECT_EQ(a, mosaicize(x, 60, 6, 100, 5));
  EXPECT_NE(a, mosaicize(x, 60, 6, 100, 6));
}

TEST(Mosaic, CoarseCellsFollowSpeechEnergy) {
  // Output energy per 100 ms slice tracks the input's.
  const auto x = testing::speech_recordings()[2].signal;
  const auto y = mosaicize(x, 30, 1, 1000.0 / 16000, 11);
  std::vector<double> ex, ey;
  for (std::size_t t = 0; t + 1600 <= x.size(); t += 1600) {
    double a = 0, b = 0;
    for (std::size_t i = t; i < t + 1600; ++i) {
      a += x[i] * x[i];
      b += y[i] * y[i];
    }
    ex.push_back(a);
    ey.push_back(b);
  }
  EXPECT_GE(correlation(ex, ey), 0.9);
}

}  // namespace
}  // namespace perturbbench
