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

// Thread filtering, self-reply detectors and corpus statistics.

#ifndef SELFREPLY_THREAD_ANALYSIS_H_
#define SELFREPLY_THREAD_ANALYSIS_H_

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"
#include "selfreply/corpus-model.h"

namespace selfreply {

struct FilterPolicy {
  // Drop threads containing a post that is neither signed nor dated.
  bool exclude_unsigned_undated = true;
  // Drop threads containing a signed post whose date could not be read.
  bool exclude_signed_undated = true;
  // Drop threads containing a bot-authored post.
  bool exclude_bot_threads = true;
  // Extra names checked against registered authors. Authors already
  // classified as bots are always treated as bots.
  const BotRuleset *bots = nullptr;
};

// True if the post disqualifies its whole thread under the policy.
bool IsDisqualifying(const Post &post, const FilterPolicy &policy);

// Keeps the threads without any disqualifying post, unchanged and in
// order.
Corpus FilterValidThreads(const Corpus &corpus, const FilterPolicy &policy);

// Unsigned posts never match any author.
bool SameAuthorPosts(const Post &a, const Post &b);

bool StartsWithSelfReply(const Thread &thread);
bool HasConsecutiveSameAuthor(const Thread &thread);
bool IsSingleAuthor(const Thread &thread);

struct StatsReport {
  int64_t threads = 0;
  int64_t posts = 0;
  int64_t threads_ge2 = 0;
  int64_t threads_with_consecutive_same_author = 0;
  int64_t threads_starting_with_self_reply = 0;
  int64_t single_author_threads_ge2 = 0;

  void Add(const Thread &thread);
  // Associative and commutative.
  void Merge(const StatsReport &other);

  // count / threads_ge2, or nullopt when threads_ge2 is 0.
  std::optional<double> Ratio(int64_t count) const;

  bool operator==(const StatsReport &other) const = default;
};

// Counts over the corpus, folding in parallel on `jobs` threads.
StatsReport CorpusStats(const Corpus &corpus, int jobs = 1);

// count / denominator as a percentage with one decimal, rounded half up
// on exact integers: FormatPercent(406292, 1688939) == "24.1%".
// nullopt when denominator is 0.
std::optional<std::string> FormatPercent(int64_t count, int64_t denominator);

// Plain-text table, one row per count.
std::string RenderStatsText(const StatsReport &report);

// Raw counts plus unrounded ratios (null when undefined).
nlohmann::ordered_json StatsToJson(const StatsReport &report);

}  // namespace selfreply

#endif  // SELFREPLY_THREAD_ANALYSIS_H_
