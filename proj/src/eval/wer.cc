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

#include "perturbbench/eval/wer.h"

#include <algorithm>
#include <cctype>
#include <vector>

#include "perturbbench/error.h"

namespace perturbbench {

Tokens normalize_text(std::string_view text) {
  Tokens tokens;
  std::string current;
  for (char raw : text) {
    const auto ch = static_cast<unsigned char>(raw);
    if (std::isspace(ch)) {
      if (!current.empty()) tokens.push_back(std::move(current));
      current.clear();
      continue;
    }
    const char up = static_cast<char>(std::toupper(ch));
    if ((up >= 'A' && up <= 'Z') || up == '\'') current += up;
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

WerCounts& WerCounts::operator+=(const WerCounts& o) {
  s += o.s;
  d += o.d;
  i += o.i;
  c += o.c;
  return *this;
}

WerCounts align(std::span<const std::string> ref,
                std::span<const std::string> hyp) {
  const std::size_t n = ref.size(), m = hyp.size();
  // cost[r][h]: edit distance between ref[0:r] and hyp[0:h].
  std::vector<std::vector<long>> cost(n + 1, std::vector<long>(m + 1, 0));
  for (std::size_t r = 0; r <= n; ++r) cost[r][0] = static_cast<long>(r);
  for (std::size_t h = 0; h <= m; ++h) cost[0][h] = static_cast<long>(h);
  for (std::size_t r = 1; r <= n; ++r) {
    for (std::size_t h = 1; h <= m; ++h) {
      const long diag = cost[r - 1][h - 1] + (ref[r - 1] == hyp[h - 1] ? 0 : 1);
      cost[r][h] = std::min({diag, cost[r - 1][h] + 1, cost[r][h - 1] + 1});
    }
  }

  WerCounts counts;
  std::size_t r = n, h = m;
  while (r > 0 || h > 0) {
    if (r > 0 && h > 0) {
      const bool match = ref[r - 1] == hyp[h - 1];
      if (cost[r][h] == cost[r - 1][h - 1] + (match ? 0 : 1)) {
        ++(match ? counts.c : counts.s);
        --r;
        --h;
        continue;
      }
    }
    if (r > 0 && cost[r][h] == cost[r - 1][h] + 1) {
      ++counts.d;
      --r;
    } else {
      ++counts.i;
      --h;
    }
  }
  return counts;
}

double wer(const WerCounts& counts) {
  const long ref = counts.reference_length();
  if (ref <= 0) throw UndefinedReferenceError("WER of an empty reference");
  return static_cast<double>(counts.s + counts.d + counts.i) /
         static_cast<double>(ref);
}

WerAggregate aggregate(std::span<const WerCounts> per_utterance) {
  if (per_utterance.empty()) throw ParameterError("aggregate of no utterances");
  WerAggregate out;
  WerCounts total;
  for (const auto& c : per_utterance) {
    out.mean_wer += wer(c);
    total += c;
  }
  out.mean_wer /= static_cast<double>(per_utterance.size());
  out.pooled_wer = wer(total);
  return out;
}

}  // namespace perturbbench
