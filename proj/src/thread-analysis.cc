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

#include "selfreply/thread-analysis.h"

#include <iomanip>
#include <sstream>
#include <vector>

#include "selfreply/parallel.h"

namespace selfreply {

bool IsDisqualifying(const Post &post, const FilterPolicy &policy) {
  if (!post.when) {
    if (!post.is_signed && policy.exclude_unsigned_undated) return true;
    if (post.is_signed && policy.exclude_signed_undated) return true;
  }
  if (policy.exclude_bot_threads && post.author) {
    if (post.author->kind == UserKind::kBot) return true;
    if (policy.bots != nullptr && post.author->kind == UserKind::kRegistered &&
        policy.bots->IsBot(post.author->value)) {
      return true;
    }
  }
  return false;
}

Corpus FilterValidThreads(const Corpus &corpus, const FilterPolicy &policy) {
  Corpus result;
  result.language = corpus.language;
  result.provenance = corpus.provenance;
  for (const Thread &thread : corpus.threads) {
    bool keep = true;
    for (const Post &post : thread.posts) {
      if (IsDisqualifying(post, policy)) {
        keep = false;
        break;
      }
    }
    if (keep) result.threads.push_back(thread);
  }
  return result;
}

bool SameAuthorPosts(const Post &a, const Post &b) {
  return a.author && b.author && SameAuthor(*a.author, *b.author);
}

bool StartsWithSelfReply(const Thread &thread) {
  return thread.posts.size() >= 2 &&
         SameAuthorPosts(thread.posts[0], thread.posts[1]);
}

bool HasConsecutiveSameAuthor(const Thread &thread) {
  for (size_t i = 0; i + 1 < thread.posts.size(); ++i) {
    if (SameAuthorPosts(thread.posts[i], thread.posts[i + 1])) return true;
  }
  return false;
}

bool IsSingleAuthor(const Thread &thread) {
  if (thread.posts.size() < 2) return false;
  for (size_t i = 1; i < thread.posts.size(); ++i) {
    if (!SameAuthorPosts(thread.posts[0], thread.posts[i])) return false;
  }
  return true;
}

void StatsReport::Add(const Thread &thread) {
  threads++;
  posts += static_cast<int64_t>(thread.posts.size());
  if (thread.posts.size() < 2) return;
  threads_ge2++;
  if (HasConsecutiveSameAuthor(thread)) threads_with_consecutive_same_author++;
  if (StartsWithSelfReply(thread)) threads_starting_with_self_reply++;
  if (IsSingleAuthor(thread)) single_author_threads_ge2++;
}

void StatsReport::Merge(const StatsReport &other) {
  threads += other.threads;
  posts += other.posts;
  threads_ge2 += other.threads_ge2;
  threads_with_consecutive_same_author +=
      other.threads_with_consecutive_same_author;
  threads_starting_with_self_reply += other.threads_starting_with_self_reply;
  single_author_threads_ge2 += other.single_author_threads_ge2;
}

std::optional<double> StatsReport::Ratio(int64_t count) const {
  if (threads_ge2 == 0) return std::nullopt;
  return static_cast<double>(count) / static_cast<double>(threads_ge2);
}

StatsReport CorpusStats(const Corpus &corpus, int jobs) {
  constexpr size_t kChunk = 4096;
  std::vector<std::pair<size_t, size_t>> chunks;
  for (size_t i = 0; i < corpus.threads.size(); i += kChunk) {
    chunks.emplace_back(i, std::min(corpus.threads.size(), i + kChunk));
  }
  std::vector<StatsReport> partial =
      ParallelMap(chunks, jobs, [&](const std::pair<size_t, size_t> &range) {
        StatsReport report;
        for (size_t i = range.first; i < range.second; ++i) {
          report.Add(corpus.threads[i]);
        }
        return report;
      });
  StatsReport total;
  for (const StatsReport &report : partial) total.Merge(report);
  return total;
}

std::optional<std::string> FormatPercent(int64_t count, int64_t denominator) {
  if (denominator <= 0 || count < 0) return std::nullopt;
  // Tenths of a percent, rounded half up without floating point.
  __int128 numerator = static_cast<__int128>(count) * 2000 + denominator;
  int64_t tenths = static_cast<int64_t>(numerator / (2 * denominator));
  return std::to_string(tenths / 10) + "." + std::to_string(tenths % 10) + "%";
}

namespace {

struct Row {
  const char *label;
  int64_t count;
  bool with_percent;
};

std::vector<Row> Rows(const StatsReport &r) {
  return {
      {"threads", r.threads, false},
      {"posts", r.posts, false},
      {"threads with >= 2 posts", r.threads_ge2, false},
      {"threads with consecutive same-author posts",
       r.threads_with_consecutive_same_author, true},
      {"threads opening with a self-reply", r.threads_starting_with_self_reply,
       true},
      {"single-author threads (>= 2 posts)", r.single_author_threads_ge2, true},
  };
}

}  // namespace

std::string RenderStatsText(const StatsReport &report) {
  std::ostringstream out;
  for (const Row &row : Rows(report)) {
    out << std::left << std::setw(44) << row.label << std::right
        << std::setw(12) << row.count;
    if (row.with_percent) {
      auto percent = FormatPercent(row.count, report.threads_ge2);
      out << " (" << (percent ? *percent : std::string("undefined")) << ")";
    }
    out << '\n';
  }
  return out.str();
}

nlohmann::ordered_json StatsToJson(const StatsReport &report) {
  using nlohmann::ordered_json;
  auto ratio = [&](int64_t count) {
    auto value = report.Ratio(count);
    return value ? ordered_json(*value) : ordered_json();
  };
  ordered_json out;
  out["threads"] = report.threads;
  out["posts"] = report.posts;
  out["threads_ge2"] = report.threads_ge2;
  out["threads_with_consecutive_same_author"] =
      report.threads_with_consecutive_same_author;
  out["threads_starting_with_self_reply"] =
      report.threads_starting_with_self_reply;
  out["single_author_threads_ge2"] = report.single_author_threads_ge2;
  out["ratios"] = {
      {"threads_with_consecutive_same_author",
       ratio(report.threads_with_consecutive_same_author)},
      {"threads_starting_with_self_reply",
       ratio(report.threads_starting_with_self_reply)},
      {"single_author_threads_ge2", ratio(report.single_author_threads_ge2)},
  };
  return out;
}

}  // namespace selfreply
