// Copyright 2026 The Selfreply Authors.
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

#include "selfreply/keyness.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "selfreply/errors.h"
#include "selfreply/hypergeometric.h"
#include "selfreply/parallel.h"
#include "selfreply/thread-analysis.h"
#include "selfreply/tokenizer.h"

namespace selfreply {

void TokenCounts::Add(std::string_view token, int64_t count) {
  auto it = counts_.find(token);
  if (it == counts_.end()) {
    counts_.emplace(std::string(token), count);
  } else {
    it->second += count;
  }
  total_ += count;
}

void TokenCounts::AddText(std::string_view text) {
  for (const std::string &token : Tokenize(text)) Add(token);
}

void TokenCounts::Merge(const TokenCounts &other) {
  for (const auto &[token, count] : other.counts_) Add(token, count);
}

int64_t TokenCounts::Count(std::string_view token) const {
  auto it = counts_.find(token);
  return it == counts_.end() ? 0 : it->second;
}

const char *DirectionName(Direction direction) {
  return direction == Direction::kOver ? "over" : "under";
}

SpecificityScore Specificity(int64_t f, int64_t t, int64_t F, int64_t T) {
  if (f < 0 || t < 0 || F < 0 || T < 0 || f > F || f > t || t > T || F > T ||
      t - f > T - F) {
    throw DomainError("specificity parameters out of domain: f=" +
                      std::to_string(f) + " t=" + std::to_string(t) +
                      " F=" + std::to_string(F) + " T=" + std::to_string(T));
  }
  SpecificityScore result;
  result.f = f;
  result.t = t;
  result.F = F;
  result.T = T;
  bool over = static_cast<__int128>(f) * T > static_cast<__int128>(F) * t;
  result.direction = over ? Direction::kOver : Direction::kUnder;
  long double log_p = over ? HypergeometricLogUpperTail(f, t, F, T)
                           : HypergeometricLogLowerTail(f, t, F, T);
  long double magnitude = -log_p / std::numbers::ln10_v<long double>;
  // Also catches -0.0 when the tail is exactly 1.
  if (magnitude <= 0) return result;
  double capped =
      static_cast<double>(std::min<long double>(magnitude, kSpecificityCap));
  result.score = over ? capped : -capped;
  return result;
}

const char *ReferenceSetName(ReferenceSet reference) {
  return reference == ReferenceSet::kOnsetPairs ? "onset-pairs" : "corpus";
}

ReferenceSet ParseReferenceSet(std::string_view name) {
  if (name == "onset-pairs" || name == "pairs")
    return ReferenceSet::kOnsetPairs;
  if (name == "corpus" || name == "whole") return ReferenceSet::kWholeCorpus;
  throw Error("unknown reference set: " + std::string(name));
}

std::vector<SpecificityScore> ScoreCounts(const TokenCounts &part,
                                          const TokenCounts &whole,
                                          const KeynessOptions &options) {
  if (part.total() == 0 || whole.total() == 0) return {};
  std::vector<std::pair<std::string, int64_t>> selected;
  for (const auto &[token, count] : whole.counts()) {
    if (count >= options.min_frequency) selected.emplace_back(token, count);
  }
  std::vector<SpecificityScore> table = ParallelMap(
      selected, options.jobs,
      [&](const std::pair<std::string, int64_t> &entry) {
        SpecificityScore score = Specificity(
            part.Count(entry.first), part.total(), entry.second, whole.total());
        score.token = entry.first;
        return score;
      });
  std::stable_sort(table.begin(), table.end(),
                   [](const SpecificityScore &a, const SpecificityScore &b) {
                     if (a.score != b.score) return a.score > b.score;
                     return a.token < b.token;
                   });
  if (options.top_n > 0 && table.size() > options.top_n) {
    table.resize(options.top_n);
  }
  return table;
}

void CountKeynessTokens(const Corpus &corpus, ReferenceSet reference,
                        TokenCounts *part, TokenCounts *whole, int jobs) {
  struct Counts {
    TokenCounts part;
    TokenCounts rest;
  };
  std::vector<Counts> counts =
      ParallelMap(corpus.threads, jobs, [&](const Thread &thread) {
        Counts c;
        bool onset = StartsWithSelfReply(thread);
        if (onset) c.part.AddText(thread.posts[1].body);
        for (size_t i = 0; i < thread.posts.size(); ++i) {
          if (onset && i == 1) continue;
          bool in_reference =
              reference == ReferenceSet::kWholeCorpus || (onset && i == 0);
          if (in_reference) c.rest.AddText(thread.posts[i].body);
        }
        return c;
      });
  for (const Counts &c : counts) {
    part->Merge(c.part);
    whole->Merge(c.part);
    whole->Merge(c.rest);
  }
}

std::vector<SpecificityScore> KeynessTable(const Corpus &corpus,
                                           const KeynessOptions &options) {
  TokenCounts part, whole;
  CountKeynessTokens(corpus, options.reference, &part, &whole, options.jobs);
  return ScoreCounts(part, whole, options);
}

std::string KeynessToTsv(const std::vector<SpecificityScore> &table) {
  std::string out = "token\tf\tt\tF\tT\tscore\tdirection\n";
  char score[32];
  for (const SpecificityScore &s : table) {
    std::snprintf(score, sizeof(score), "%.4f", s.score);
    out += s.token + "\t" + std::to_string(s.f) + "\t" + std::to_string(s.t) +
           "\t" + std::to_string(s.F) + "\t" + std::to_string(s.T) + "\t" +
           score + "\t" + DirectionName(s.direction) + "\n";
  }
  return out;
}

}  // namespace selfreply
