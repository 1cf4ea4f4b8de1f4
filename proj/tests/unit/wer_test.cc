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

#include <random>
#include <string>
#include <vector>

#include "perturbbench/error.h"
#include "perturbbench/eval/wer.h"
#include "test_support.h"

namespace perturbbench {
namespace {

using V = std::vector<std::string>;

TEST(Normalize, Rules) {
  EXPECT_EQ(normalize_text("Hello, world!"), (V{"HELLO", "WORLD"}));
  EXPECT_EQ(normalize_text(""), V{});
  EXPECT_EQ(normalize_text("don't  stop"), (V{"DON'T", "STOP"}));
  EXPECT_EQ(normalize_text("  a\tb\nc  "), (V{"A", "B", "C"}));
  EXPECT_EQ(normalize_text("route 66 now"), (V{"ROUTE", "NOW"}));
  EXPECT_EQ(normalize_text("e-mail"), (V{"EMAIL"}));
}

TEST(Align, Examples) {
  EXPECT_EQ(align(V{"a", "b", "c"}, V{"a", "b", "c"}), (WerCounts{0, 0, 0, 3}));
  EXPECT_EQ(align(V{"a", "b", "c"}, V{"a", "x", "c", "d"}), (WerCounts{1, 0, 1, 2}));
  EXPECT_EQ(align(V{"a", "b"}, V{}), (WerCounts{0, 2, 0, 0}));
  EXPECT_EQ(align(V{}, V{"a"}), (WerCounts{0, 0, 1, 0}));
  EXPECT_EQ(align(V{"a"}, V{"x", "y", "z"}), (WerCounts{1, 0, 2, 0}));
}

TEST(Align, TieBreakPrefersSubstitutionOverDeleteInsert) {
  // S,S and D,C,I both cost 2; the backtrace takes S at the last position.
  EXPECT_EQ(align(V{"a", "b"}, V{"b", "c"}), (WerCounts{2, 0, 0, 0}));
  EXPECT_EQ(testing::enumerate_alignments({"a", "b"}, {"b", "c"}),
            (WerCounts{2, 0, 0, 0}));
  EXPECT_EQ(align(V{"a"}, V{"b"}), (WerCounts{1, 0, 0, 0}));
}

TEST(Align, MatchesExhaustiveEnumeration) {
  std::mt19937_64 rng(10);
  std::uniform_int_distribution<int> len(0, 6), sym(0, 3);
  for (int t = 0; t < 300; ++t) {
    V ref(len(rng)), hyp(len(rng));
    for (auto& s : ref) s = std::string(1, static_cast<char>('a' + sym(rng)));
    for (auto& s : hyp) s = std::string(1, static_cast<char>('a' + sym(rng)));
    const auto got = align(ref, hyp);
    EXPECT_EQ(got, testing::enumerate_alignments(ref, hyp));
    EXPECT_EQ(got.reference_length(), static_cast<long>(ref.size()));
    EXPECT_EQ(got.hypothesis_length(), static_cast<long>(hyp.size()));
    EXPECT_EQ(got.s + got.d + got.i, testing::levenshtein(ref, hyp));
  }
}

TEST(Align, LevenshteinOnLongerSequences) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> len(0, 60), sym(0, 9);
  for (int t = 0; t < 200; ++t) {
    V ref(len(rng)), hyp(len(rng));
    for (auto& s : ref) s = "w" + std::to_string(sym(rng));
    for (auto& s : hyp) s = "w" + std::to_string(sym(rng));
    const auto c = align(ref, hyp);
    EXPECT_EQ(c.s + c.d + c.i, testing::levenshtein(ref, hyp));
    EXPECT_EQ(c.reference_length(), static_cast<long>(ref.size()));
    EXPECT_EQ(c.hypothesis_length(), static_cast<long>(hyp.size()));
  }
}

TEST(Wer, Formula) {
  EXPECT_EQ(wer(WerCounts{0, 0, 0, 5}), 0.0);
  EXPECT_DOUBLE_EQ(wer(WerCounts{1, 0, 1, 2}), 2.0 / 3.0);
  EXPECT_EQ(wer(WerCounts{1, 0, 2, 0}), 3.0);
  EXPECT_THROW(wer(WerCounts{0, 0, 3, 0}), UndefinedReferenceError);
}

TEST(Wer, ZeroIffNormalizedTextsEqual) {
  const std::vector<std::pair<std::string, std::string>> cases = {
      {"Hello world", "hello, WORLD!"}, {"a b", "a b c"}, {"a b", "b a"},
      {"it's", "its"}, {"one", "one"}};
  for (const auto& [r, h] : cases) {
    const auto rt = normalize_text(r), ht = normalize_text(h);
    EXPECT_EQ(wer(align(rt, ht)) == 0.0, rt == ht) << r << " | " << h;
  }
}

TEST(Wer, InvariantUnderRelabeling) {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<int> len(1, 8), sym(0, 4);
  for (int t = 0; t < 100; ++t) {
    V ref(len(rng)), hyp(len(rng));
    for (auto& s : ref) s = std::string(1, static_cast<char>('a' + sym(rng)));
    for (auto& s : hyp) s = std::string(1, static_cast<char>('a' + sym(rng)));
    auto relabel = [](V v) {
      for (auto& s : v) s = "TOKEN_" + std::string(1, static_cast<char>('z' - (s[0] - 'a')));
      return v;
    };
    EXPECT_EQ(align(ref, hyp), align(relabel(ref), relabel(hyp)));
  }
}

TEST(Aggregate, MeanAndPooled) {
  const std::vector<WerCounts> same = {{0, 0, 0, 4}, {0, 0, 0, 2}};
  EXPECT_EQ(aggregate(same).mean_wer, 0.0);
  EXPECT_EQ(aggregate(same).pooled_wer, 0.0);
  const std::vector<WerCounts> equal_len = {{0, 0, 0, 3}, {0, 3, 0, 0}};
  EXPECT_DOUBLE_EQ(aggregate(equal_len).mean_wer, 0.5);
  EXPECT_DOUBLE_EQ(aggregate(equal_len).pooled_wer, 0.5);
  // WER 0 with 1 reference word, WER 1 with 9: mean 0.5, pooled 9/10.
  const std::vector<WerCounts> skewed = {{0, 0, 0, 1}, {0, 9, 0, 0}};
  EXPECT_DOUBLE_EQ(aggregate(skewed).mean_wer, 0.5);
  EXPECT_DOUBLE_EQ(aggregate(skewed).pooled_wer, 0.9);
  EXPECT_THROW(aggregate(std::vector<WerCounts>{}), ParameterError);
}

}  // namespace
}  // namespace perturbbench
