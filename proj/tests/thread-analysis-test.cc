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

#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "support/fixtures.h"
#include "support/oracles.h"
#include "support/synthetic.h"

namespace selfreply {
namespace {

// Builds a thread from a compact author pattern such as "AAB". A '-' stands
// for an unsigned post, '*' for a post signed without a readable date.
Thread Pattern(const std::string &authors, const std::string &id = "t") {
  Thread thread;
  thread.id = id;
  for (char c : authors) {
    Post post;
    post.body = "x";
    if (c != '-') {
      post.author = UserId{UserKind::kRegistered, std::string(1, c)};
      post.is_signed = true;
      if (c != '*') post.when = Timestamp::ParseIso("2010-01-01T00:00Z");
    }
    thread.posts.push_back(post);
  }
  RenumberPosts(&thread);
  return thread;
}

TEST(ThreadPredicatesTest, PatternExamples) {
  struct Case {
    const char *pattern;
    bool onset, consecutive, single;
  };
  const Case cases[] = {
      {"A", false, false, false},  {"AA", true, true, true},
      {"AB", false, false, false}, {"ABB", false, true, false},
      {"AAB", true, true, false},  {"ABA", false, false, false},
      {"AAAA", true, true, true},  {"A-A", false, false, false},
      {"--", false, false, false}, {"", false, false, false},
  };
  for (const Case &c : cases) {
    Thread thread = Pattern(c.pattern);
    EXPECT_EQ(StartsWithSelfReply(thread), c.onset) << c.pattern;
    EXPECT_EQ(HasConsecutiveSameAuthor(thread), c.consecutive) << c.pattern;
    EXPECT_EQ(IsSingleAuthor(thread), c.single) << c.pattern;
  }
}

TEST(ThreadPredicatesTest, IpAndRegisteredWithSameTextDiffer) {
  Thread thread;
  Post a, b;
  a.author = UserId{UserKind::kIp, "1.2.3.4"};
  b.author = UserId{UserKind::kRegistered, "1.2.3.4"};
  thread.posts = {a, b};
  EXPECT_FALSE(StartsWithSelfReply(thread));
}

TEST(ThreadPredicatesTest, TalkPageFixtures) {
  // An anonymous user answering their own question.
  TalkPage self_answer = testing::ParseFixture("self-answer");
  ASSERT_EQ(self_answer.threads.size(), 1u);
  EXPECT_TRUE(StartsWithSelfReply(self_answer.threads[0]));
  EXPECT_TRUE(IsSingleAuthor(self_answer.threads[0]));

  TalkPage uruk_edits = testing::ParseFixture("uruk-edits");
  ASSERT_FALSE(uruk_edits.threads.empty());
  EXPECT_TRUE(StartsWithSelfReply(uruk_edits.threads[0]));
}

TEST(ThreadPredicatesTest, InvariantsOnRandomThreads) {
  Corpus corpus = testing::RandomPatternCorpus(3000, 21);
  for (const Thread &thread : corpus.threads) {
    if (StartsWithSelfReply(thread)) {
      EXPECT_TRUE(HasConsecutiveSameAuthor(thread)) << thread.id;
    }
    if (IsSingleAuthor(thread)) {
      EXPECT_TRUE(StartsWithSelfReply(thread)) << thread.id;
    }
    if (thread.posts.size() < 2) {
      EXPECT_FALSE(HasConsecutiveSameAuthor(thread));
      EXPECT_FALSE(IsSingleAuthor(thread));
    }
  }
}

TEST(StatsReportTest, MatchesBruteForceForAnyJobCount) {
  Corpus corpus = testing::RandomPatternCorpus(20000, 5);
  StatsReport want = testing::BruteForceStats(corpus);
  for (int jobs : {1, 2, 3, 8}) {
    EXPECT_EQ(CorpusStats(corpus, jobs), want) << jobs;
  }
}

TEST(StatsReportTest, MergeIsAssociativeAndCommutative) {
  Corpus corpus = testing::RandomPatternCorpus(900, 17);
  StatsReport a, b, c;
  for (size_t i = 0; i < corpus.threads.size(); ++i) {
    (i % 3 == 0 ? a : i % 3 == 1 ? b : c).Add(corpus.threads[i]);
  }
  StatsReport left = a, right = b, ab = a, ba = b;
  left.Merge(b);
  left.Merge(c);
  right.Merge(c);
  StatsReport a_then = a;
  a_then.Merge(right);
  EXPECT_EQ(left, a_then);
  ab.Merge(b);
  ba.Merge(a);
  EXPECT_EQ(ab, ba);
  StatsReport identity = a;
  identity.Merge(StatsReport{});
  EXPECT_EQ(identity, a);
}

TEST(StatsReportTest, AddingAThreadNeverDecreasesCounts) {
  std::mt19937_64 rng(2);
  Corpus corpus = testing::RandomPatternCorpus(500, 9);
  StatsReport report;
  for (const Thread &thread : corpus.threads) {
    StatsReport before = report;
    report.Add(thread);
    EXPECT_EQ(report.threads, before.threads + 1);
    EXPECT_GE(report.threads_ge2, before.threads_ge2);
    EXPECT_GE(report.threads_starting_with_self_reply,
              before.threads_starting_with_self_reply);
    EXPECT_LE(report.threads_starting_with_self_reply,
              report.threads_with_consecutive_same_author);
    EXPECT_LE(report.single_author_threads_ge2,
              report.threads_starting_with_self_reply);
  }
}

TEST(FilterValidThreadsTest, DefaultPolicyDropsUndatedAndBotThreads) {
  Corpus corpus;
  corpus.threads = {Pattern("AB", "ok"), Pattern("A-", "unsigned"),
                    Pattern("A*", "undated")};
  Thread bot = Pattern("AB", "bot");
  bot.posts[1].author = UserId{UserKind::kBot, "ExampleBot"};
  corpus.threads.push_back(bot);
  Thread listed = Pattern("AB", "listed");
  listed.posts[1].author = UserId{UserKind::kRegistered, "Helper"};
  corpus.threads.push_back(listed);

  FilterPolicy policy;
  Corpus kept = FilterValidThreads(corpus, policy);
  std::vector<std::string> ids;
  for (const Thread &t : kept.threads) ids.push_back(t.id);
  EXPECT_EQ(ids, (std::vector<std::string>{"ok", "listed"}));

  BotRuleset bots;
  bots.AddName("Helper");
  policy.bots = &bots;
  EXPECT_EQ(FilterValidThreads(corpus, policy).threads.size(), 1u);

  FilterPolicy lenient;
  lenient.exclude_unsigned_undated = false;
  lenient.exclude_signed_undated = false;
  lenient.exclude_bot_threads = false;
  EXPECT_EQ(FilterValidThreads(corpus, lenient).threads.size(), 5u);

  FilterPolicy signed_only = lenient;
  signed_only.exclude_signed_undated = true;
  EXPECT_EQ(FilterValidThreads(corpus, signed_only).threads.size(), 4u);
}

TEST(FilterValidThreadsTest, KeepsOrderAndMetadata) {
  Corpus corpus = testing::RandomPatternCorpus(400, 3);
  corpus.provenance = "random";
  Corpus kept = FilterValidThreads(corpus, FilterPolicy{});
  EXPECT_EQ(kept.provenance, "random");
  size_t next = 0;
  for (const Thread &thread : kept.threads) {
    while (next < corpus.threads.size() &&
           corpus.threads[next].id != thread.id) {
      next++;
    }
    ASSERT_LT(next, corpus.threads.size()) << "order changed at " << thread.id;
    for (const Post &post : thread.posts) {
      EXPECT_FALSE(IsDisqualifying(post, FilterPolicy{}));
    }
  }
}

TEST(FormatPercentTest, RoundsHalfUpToOneDecimal) {
  EXPECT_EQ(FormatPercent(1, 3), "33.3%");
  EXPECT_EQ(FormatPercent(2, 3), "66.7%");
  EXPECT_EQ(FormatPercent(1, 8), "12.5%");
  EXPECT_EQ(FormatPercent(1, 16), "6.3%");
  EXPECT_EQ(FormatPercent(0, 5), "0.0%");
  EXPECT_EQ(FormatPercent(5, 5), "100.0%");
  EXPECT_EQ(FormatPercent(1, 2000), "0.1%");
  EXPECT_EQ(FormatPercent(1, 2001), "0.0%");
  EXPECT_FALSE(FormatPercent(1, 0));
  EXPECT_FALSE(FormatPercent(-1, 4));
}

TEST(StatsRenderingTest, UndefinedRatiosWithoutMultiPostThreads) {
  StatsReport empty;
  EXPECT_FALSE(empty.Ratio(0));
  std::string text = RenderStatsText(empty);
  EXPECT_NE(text.find("(undefined)"), std::string::npos);
  nlohmann::ordered_json json = StatsToJson(empty);
  EXPECT_TRUE(json["ratios"]["threads_starting_with_self_reply"].is_null());
  EXPECT_EQ(json["threads"], 0);
}

TEST(StatsRenderingTest, PercentagesUseMultiPostThreadsAsDenominator) {
  Corpus corpus;
  corpus.threads = {Pattern("AA", "1"), Pattern("AB", "2"), Pattern("ABB", "3"),
                    Pattern("A", "4")};
  StatsReport report = CorpusStats(corpus);
  EXPECT_EQ(report.threads, 4);
  EXPECT_EQ(report.posts, 8);
  EXPECT_EQ(report.threads_ge2, 3);
  EXPECT_EQ(report.threads_with_consecutive_same_author, 2);
  EXPECT_EQ(report.threads_starting_with_self_reply, 1);
  EXPECT_EQ(report.single_author_threads_ge2, 1);
  std::string text = RenderStatsText(report);
  EXPECT_NE(text.find("(66.7%)"), std::string::npos);
  EXPECT_NE(text.find("(33.3%)"), std::string::npos);
  nlohmann::ordered_json json = StatsToJson(report);
  EXPECT_DOUBLE_EQ(
      json["ratios"]["threads_with_consecutive_same_author"].get<double>(),
      2.0 / 3.0);
}

}  // namespace
}  // namespace selfreply
