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
#include <vector>

#include "perturbbench/error.h"
#include "perturbbench/perturb/apply.h"
#include "perturbbench/perturb/spec.h"
#include "perturbbench/perturb/time_domain.h"
#include "perturbbench/signal/windowing.h"
#include "perturbbench/spectral/fft.h"
#include "test_support.h"

namespace perturbbench {
namespace {

using Params = PerturbationSpec::Params;

TEST(Spec, CanonicalTextSortsKeysAndFillsDefaults) {
  const PerturbationSpec s(PerturbationKind::kReverse, {{"window_ms", "150"}});
  EXPECT_EQ(s.canonical(), "reverse:fade_ms=2;window_ms=150");
  EXPECT_EQ(PerturbationSpec().canonical(), "none");
  EXPECT_EQ(PerturbationSpec::parse("reverse:window_ms=150;fade_ms=2"), s);
  EXPECT_EQ(PerturbationSpec::parse("reverse:window_ms=150.0"), s);
  EXPECT_EQ(PerturbationSpec::parse("none"), PerturbationSpec());
}

TEST(Spec, CanonicalRoundTripForEveryGridKind) {
  const std::vector<std::string> texts = {
      "warp:factor=0.25",
      "chimera:mode=speech_tfs;n_bands=30",
      "mosaic:freq_win_bands=6;n_bands=60;window_ms=100",
      "interrupt:fraction=0.5;mode=mask;selection=periodic;snr_db=-9;window_ms=300",
      "interrupt:fraction=0.5;mode=silence;seed=7;selection=random;window_ms=300",
      "repackage:factor=2;fade_ms=2;silence_ms=125;window_ms=250",
      "envelope_reverse:n_bands=30;window_ms=10",
      "shuffle:fade_ms=0;seed=18446744073709551615;window_ms=0.125",
  };
  for (const auto& t : texts) {
    EXPECT_EQ(PerturbationSpec::parse(t).canonical(), t);
  }
}

TEST(Spec, NumbersUseShortestForm) {
  EXPECT_EQ(format_number(0.1), "0.1");
  EXPECT_EQ(format_number(-0.0), "0");
  EXPECT_EQ(format_number(1200), "1200");
  const double x = 0.14529547053565383;
  EXPECT_EQ(std::stod(format_number(x)), x);
}

TEST(Spec, RejectsSchemaViolations) {
  auto bad = [](const std::string& t) {
    EXPECT_THROW(PerturbationSpec::parse(t), ParameterError) << t;
  };
  bad("");
  bad("bogus");
  bad("reverse");
  bad("reverse:window_ms=0");
  bad("reverse:window_ms=abc");
  bad("reverse:window_ms=10;factor=2");
  bad("reverse:window_ms=10;fade_ms=-1");
  bad("reverse:window_ms=10;window_ms");
  bad("none:window_ms=1");
  bad("warp:factor=-1");
  bad("chimera:n_bands=0");
  bad("chimera:n_bands=2.5");
  bad("chimera:n_bands=4;mode=both");
  bad("mosaic:n_bands=6;freq_win_bands=7;window_ms=10");
  bad("interrupt:window_ms=10;fraction=1.5;mode=silence");
  bad("interrupt:window_ms=10;fraction=0.5;mode=mask");
  bad("interrupt:window_ms=10;fraction=0.5;mode=silence;snr_db=0");
  bad("repackage:window_ms=250;factor=1;silence_ms=0");
  bad("repackage:window_ms=250;factor=2;silence_ms=-1");
  bad("shuffle:window_ms=1;seed=-3");
}

TEST(Spec, SeedHandling) {
  const auto sh = PerturbationSpec::parse("shuffle:window_ms=2");
  EXPECT_FALSE(sh.seed().has_value());
  const auto seeded = sh.with_seed(42);
  EXPECT_EQ(seeded.seed(), 42u);
  EXPECT_EQ(seeded.canonical(), "shuffle:fade_ms=2;seed=42;window_ms=2");
  EXPECT_EQ(seeded.without_seed(), sh);
  const auto rev = PerturbationSpec::parse("reverse:window_ms=2");
  EXPECT_EQ(rev.with_seed(42), rev);
}

TEST(Spec, WithRevalidates) {
  const auto s = PerturbationSpec::parse("reverse:window_ms=2");
  EXPECT_EQ(s.with("window_ms", "150").number("window_ms"), 150.0);
  EXPECT_THROW(s.with("window_ms", "0"), ParameterError);
  EXPECT_THROW(s.with("factor", "2"), ParameterError);
}

TEST(Spec, KindNamesRoundTrip) {
  EXPECT_EQ(all_kinds().size(), 9u);
  for (auto k : all_kinds()) EXPECT_EQ(parse_kind(kind_name(k)), k);
  EXPECT_THROW(parse_kind("reversal"), ParameterError);
}

// Per-frame FFT magnitudes, frames cut like segment().
std::vector<std::vector<double>> frame_magnitudes(const AudioSignal& x, double ms) {
  std::vector<std::vector<double>> out;
  for (const auto& f : segment(x, ms)) {
    const auto spec = RealFft(f.size()).forward(f);
    std::vector<double> m;
    for (const auto& c : spec) m.push_back(std::abs(c));
    out.push_back(std::move(m));
  }
  return out;
}

TEST(Reverse, WholeWindowIsGlobalReversal) {
  const auto x = testing::white_noise(1000, 2);
  const auto y = reverse_local(x, 1000.0, 0.0);
  std::vector<double> want(x.vector().rbegin(), x.vector().rend());
  EXPECT_EQ(y.vector(), want);
}

TEST(Reverse, InvolutionAndSpectrumPreservation) {
  const auto x = testing::speech_recordings()[0].signal;
  for (double ms : {0.125, 0.3, 1.0, 2.5, 20.0, 150.0, 1200.0}) {
    const auto y = reverse_local(x, ms, 0.0);
    ASSERT_EQ(y.size(), x.size());
    EXPECT_EQ(reverse_local(y, ms, 0.0), x) << ms;
    const auto a = frame_magnitudes(x, ms), b = frame_magnitudes(y, ms);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t f = 0; f < a.size(); ++f) {
      double num = 0, den = 0;
      for (std::size_t k = 0; k < a[f].size(); ++k) {
        num += (a[f][k] - b[f][k]) * (a[f][k] - b[f][k]);
        den += a[f][k] * a[f][k];
      }
      if (den > 0) {
        ASSERT_LE(std::sqrt(num / den), 1e-6) << ms << " " << f;
      }
    }
  }
}

TEST(Reverse, FadesKeepLength) {
  const auto x = testing::white_noise(12345, 3);
  EXPECT_EQ(reverse_local(x, 7.0).size(), x.size());
  EXPECT_EQ(reverse_local(x, 0.125).size(), x.size());
}

TEST(Shuffle, PreservesFrameMultisets) {
  const auto x = testing::speech_recordings()[0].signal;
  for (double ms : {0.125, 1.0, 2.0, 33.0, 1200.0}) {
    const auto y = shuffle_local(x, ms, 99, 0.0);
    ASSERT_EQ(y.size(), x.size());
    auto fx = segment(x, ms), fy = segment(y, ms);
    ASSERT_EQ(fx.size(), fy.size());
    for (std::size_t f = 0; f < fx.size(); ++f) {
      std::sort(fx[f].begin(), fx[f].end());
      std::sort(fy[f].begin(), fy[f].end());
      ASSERT_EQ(fx[f], fy[f]) << ms << " " << f;
    }
  }
}

TEST(Shuffle, SeedDeterminism) {
  const auto x = testing::white_noise(8000, 4);
  EXPECT_EQ(shuffle_local(x, 5.0, 1), shuffle_local(x, 5.0, 1));
  EXPECT_NE(shuffle_local(x, 5.0, 1), shuffle_local(x, 5.0, 2));
}

TEST(SelectFrames, PeriodicAndRandom) {
  const auto half = select_frames(10, 0.5, FrameSelection::kPeriodic, 0);
  EXPECT_EQ(half, (std::vector<bool>{false, true, false, true, false, true,
                                     false, true, false, true}));
  EXPECT_EQ(select_frames(3, 0.5, FrameSelection::kPeriodic, 0),
            (std::vector<bool>{false, true, false}));
  for (std::size_t n : {1u, 7u, 30u, 101u}) {
    for (double f : {0.0, 0.25, 0.5, 0.8, 1.0}) {
      const auto p = select_frames(n, f, FrameSelection::kPeriodic, 3);
      EXPECT_EQ(static_cast<double>(std::count(p.begin(), p.end(), true)),
                std::floor(f * n));
      if (f <= 0.5) {
        for (std::size_t j = 1; j < n; ++j) EXPECT_FALSE(p[j - 1] && p[j]);
      }
      const auto r = select_frames(n, f, FrameSelection::kRandom, 3);
      EXPECT_EQ(static_cast<long long>(std::count(r.begin(), r.end(), true)),
                std::llround(f * n));
    }
  }
  EXPECT_EQ(select_frames(50, 0.5, FrameSelection::kRandom, 8),
            select_frames(50, 0.5, FrameSelection::kRandom, 8));
  EXPECT_THROW(select_frames(5, -0.1, FrameSelection::kPeriodic, 0), ParameterError);
  EXPECT_THROW(select_frames(5, 1.1, FrameSelection::kPeriodic, 0), ParameterError);
}

TEST(Interrupt, DegenerateFractions) {
  const auto x = testing::white_noise(5000, 5);
  InterruptOptions o;
  o.window_ms = 20;
  o.fraction = 0.0;
  EXPECT_EQ(interrupt(x, o), x);
  o.mode = InterruptMode::kMask;
  o.snr_db = -9;
  EXPECT_EQ(interrupt(x, o), x);
  o.mode = InterruptMode::kSilence;
  o.fraction = 1.0;
  const auto y = interrupt(x, o);
  ASSERT_EQ(y.size(), x.size());
  for (double v : y.samples()) EXPECT_EQ(v, 0.0);
}

TEST(Interrupt, SilenceEnergyDecreasesWithFraction) {
  const auto x = testing::speech_recordings()[6].signal;
  for (auto sel : {FrameSelection::kPeriodic, FrameSelection::kRandom}) {
    double prev = INFINITY;
    for (double f = 0.0; f <= 1.0 + 1e-9; f += 0.1) {
      InterruptOptions o;
      o.window_ms = 50;
      o.fraction = std::min(f, 1.0);
      o.selection = sel;
      const double e = mean_power(interrupt(x, o).samples());
      EXPECT_LE(e, prev);
      prev = e;
    }
  }
}

TEST(Interrupt, MaskReachesRequestedSnr) {
  const auto x = testing::speech_recordings()[4].signal;
  for (double snr : {-9.0, 0.0, 12.5}) {
    for (double ms : {2.0, 37.0, 300.0}) {
      InterruptOptions o;
      o.window_ms = ms;
      o.mode = InterruptMode::kMask;
      o.snr_db = snr;
      o.seed = 17;
      const auto y = interrupt(x, o);
      ASSERT_EQ(y.size(), x.size());
      const std::size_t w = ms_to_samples(ms, 16000);
      const auto chosen = select_frames((x.size() + w - 1) / w, 0.5,
                                        FrameSelection::kPeriodic, 17);
      double noise = 0;
      std::size_t count = 0;
      for (std::size_t i = 0; i < x.size(); ++i) {
        const double d = y[i] - x[i];
        if (chosen[i / w]) {
          noise += d * d;
          ++count;
        } else {
          ASSERT_EQ(d, 0.0);
        }
      }
      const double measured = 10 * std::log10(mean_power(x.samples()) / (noise / count));
      EXPECT_NEAR(measured, snr, 0.1) << ms;
    }
  }
}

TEST(Repackage, DurationCompensatedBySilence) {
  for (const auto& rec : testing::speech_recordings()) {
    const auto y = repackage(rec.signal, 250, 2, 125);
    EXPECT_LE(std::abs(static_cast<double>(y.size()) - rec.signal.size()),
              0.01 * rec.signal.size())
        << rec.id;
  }
  const auto x = testing::speech_recordings()[5].signal;
  for (double c : {1.5, 3.0, 4.0}) {
    const auto y = repackage(x, 200, c, 200 * (1 - 1 / c));
    EXPECT_LE(std::abs(static_cast<double>(y.size()) - x.size()), 0.01 * x.size()) << c;
  }
}

TEST(Repackage, NoSilenceHalvesDuration) {
  const auto x = testing::speech_recordings()[5].signal;
  const auto y = repackage(x, 250, 2, 0);
  EXPECT_LE(std::abs(static_cast<double>(y.size()) - x.size() / 2.0),
            0.01 * x.size() / 2.0);
}

TEST(Repackage, InsertedSilenceIsZero) {
  const auto x = testing::sine(400, 1000);
  const auto y = repackage(x, 100, 2, 50, 0);
  // Each 100 ms frame becomes 50 ms of audio then 50 ms of zeros.
  for (std::size_t f = 0; f < 10; ++f) {
    for (std::size_t i = f * 1600 + 800; i < (f + 1) * 1600; ++i) {
      ASSERT_EQ(y[i], 0.0) << f;
    }
  }
}

TEST(Repackage, RejectsInvalidArguments) {
  const auto x = testing::white_noise(1000, 1);
  EXPECT_THROW(repackage(x, 250, 1.0, 0), ParameterError);
  EXPECT_THROW(repackage(x, 250, 0.5, 0), ParameterError);
  EXPECT_THROW(repackage(x, 250, 2.0, -1), ParameterError);
}

TEST(Apply, DispatchesLikeTheDirectCalls) {
  const auto x = testing::speech_recordings()[0].signal;
  EXPECT_EQ(apply(PerturbationSpec(), x), x);
  EXPECT_EQ(apply(PerturbationSpec::parse("reverse:window_ms=150"), x),
            reverse_local(x, 150, 2));
  EXPECT_EQ(apply(PerturbationSpec::parse("shuffle:window_ms=2;seed=5"), x),
            shuffle_local(x, 2, 5, 2));
}

TEST(Apply, LengthPreservedExceptWarpAndRepackage) {
  const auto x = testing::speech_recordings()[0].signal;
  const std::vector<std::string> specs = {
      "reverse:window_ms=33", "shuffle:window_ms=5;seed=1",
      "chimera:n_bands=8;seed=1", "chimera:mode=speech_tfs;n_bands=8;seed=1",
      "mosaic:freq_win_bands=6;n_bands=60;window_ms=100;seed=2",
      "interrupt:fraction=0.5;mode=mask;snr_db=-9;window_ms=300;seed=3",
      "interrupt:fraction=0.5;mode=silence;window_ms=300",
      "envelope_reverse:n_bands=30;window_ms=50"};
  for (const auto& s : specs) {
    const auto spec = PerturbationSpec::parse(s);
    const auto y = apply(spec, x);
    EXPECT_EQ(y.size(), x.size()) << s;
    EXPECT_EQ(y, apply(spec, x)) << s;
  }
}

TEST(Apply, ChimeraModesDiffer) {
  const auto x = testing::speech_recordings()[0].signal;
  const auto env = apply(PerturbationSpec::parse("chimera:n_bands=30;seed=1"), x);
  const auto tfs =
      apply(PerturbationSpec::parse("chimera:mode=speech_tfs;n_bands=30;seed=1"), x);
  EXPECT_NE(env, tfs);
  EXPECT_NE(env, x);
}

}  // namespace
}  // namespace perturbbench
