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

// Lexical specificity of a part (sub-corpus) against a whole.
//
// For a token seen f times among the t tokens of the part and F times among
// the T tokens of the whole, X ~ Hypergeometric(T, F, t) models the count
// expected by chance. Over-represented tokens (f*T > F*t) score
// -log10 P(X >= f); the others score log10 P(X <= f). Scores are clamped to
// [-1000, 1000].

#ifndef SELFREPLY_KEYNESS_H_
#define SELFREPLY_KEYNESS_H_

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "selfreply/corpus-model.h"

namespace selfreply {

inline constexpr double kSpecificityCap = 1000;

class TokenCounts {
 public:
  void Add(std::string_view token, int64_t count = 1);
  void AddText(std::string_view text);
  // Associative and commutative.
  void Merge(const TokenCounts &other);

  int64_t Count(std::string_view token) const;
  int64_t total() const { return total_; }
  const std::map<std::string, int64_t, std::less<>> &counts() const {
    return counts_;
  }

 private:
  std::map<std::string, int64_t, std::less<>> counts_;
  int64_t total_ = 0;
};

enum class Direction { kOver, kUnder };

const char *DirectionName(Direction direction);

struct SpecificityScore {
  std::string token;
  int64_t f = 0;
  int64_t t = 0;
  int64_t F = 0;
  int64_t T = 0;
  double score = 0;
  Direction direction = Direction::kUnder;
};

// Throws DomainError unless 0 <= f <= F, f <= t <= T and t - f <= T - F.
SpecificityScore Specificity(int64_t f, int64_t t, int64_t F, int64_t T);

// Which messages form the whole the second messages are compared against.
enum class ReferenceSet {
  // First and second messages of the threads opening with a self-reply.
  kOnsetPairs,
  // Every message of every thread in the corpus.
  kWholeCorpus,
};

const char *ReferenceSetName(ReferenceSet reference);
ReferenceSet ParseReferenceSet(std::string_view name);

struct KeynessOptions {
  int64_t min_frequency = 5;
  ReferenceSet reference = ReferenceSet::kOnsetPairs;
  // 0 keeps every row.
  size_t top_n = 0;
  int jobs = 1;
};

// Scores every token with F >= min_frequency, highest score first; ties
// are ordered by token. Empty when the part or the whole is empty.
std::vector<SpecificityScore> ScoreCounts(const TokenCounts &part,
                                          const TokenCounts &whole,
                                          const KeynessOptions &options);

// Part: second messages of the threads opening with a self-reply.
// Whole: chosen by options.reference. Part tokens are always included in
// the whole.
void CountKeynessTokens(const Corpus &corpus, ReferenceSet reference,
                        TokenCounts *part, TokenCounts *whole, int jobs = 1);

std::vector<SpecificityScore> KeynessTable(const Corpus &corpus,
                                           const KeynessOptions &options);

// Header line plus one row per score: token, f, t, F, T, score, direction.
std::string KeynessToTsv(const std::vector<SpecificityScore> &table);

}  // namespace selfreply

#endif  // SELFREPLY_KEYNESS_H_
