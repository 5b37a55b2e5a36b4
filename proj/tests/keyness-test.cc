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

// Hypergeometric tails, specificity scores, the tokenizer and keyness tables.

#include "selfreply/keyness.h"

#include <cmath>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "selfreply/errors.h"
#include "selfreply/hypergeometric.h"
#include "selfreply/tokenizer.h"
#include "support/oracles.h"

namespace selfreply {
namespace {

using testing::NearlyEqual;

TEST(HypergeometricTest, SmallCaseByHand) {
  // P(X = 3) with 3 marked among 10, drawing 5: C(7,2) / C(10,5).
  EXPECT_NEAR(HypergeometricUpperTail(3, 5, 3, 10), 21.0 / 252.0, 1e-15);
  EXPECT_NEAR(HypergeometricLowerTail(0, 5, 3, 10), 21.0 / 252.0, 1e-15);
  EXPECT_NEAR(std::exp(static_cast<double>(HypergeometricLogPmf(1, 5, 3, 10))),
              105.0 / 252.0, 1e-15);
}

TEST(HypergeometricTest, TailsAreComplementary) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 2000; ++i) {
    int64_t N = 1 + rng() % 150;
    int64_t K = rng() % (N + 1);
    int64_t n = rng() % (N + 1);
    int64_t lo = std::max<int64_t>(0, n + K - N);
    int64_t hi = std::min(n, K);
    int64_t k = lo + rng() % (hi - lo + 1);
    double upper = HypergeometricUpperTail(k, n, K, N);
    double lower = HypergeometricLowerTail(k, n, K, N);
    double pmf =
        std::exp(static_cast<double>(HypergeometricLogPmf(k, n, K, N)));
    EXPECT_NEAR(upper + lower - pmf, 1.0, 1e-12)
        << k << " " << n << " " << K << " " << N;
    EXPECT_DOUBLE_EQ(HypergeometricUpperTail(lo, n, K, N), 1.0);
    EXPECT_DOUBLE_EQ(HypergeometricLowerTail(hi, n, K, N), 1.0);
  }
}

TEST(HypergeometricTest, LogTailsAgreeWithExactArithmetic) {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 3000; ++i) {
    int64_t N = 1 + rng() % 400;
    int64_t K = rng() % (N + 1);
    int64_t n = rng() % (N + 1);
    int64_t lo = std::max<int64_t>(0, n + K - N);
    int64_t hi = std::min(n, K);
    int64_t k = lo + rng() % (hi - lo + 1);
    double got = static_cast<double>(-HypergeometricLogUpperTail(k, n, K, N) /
                                     std::log(10.0L));
    double want = testing::ExactMinusLog10UpperTail(k, n, K, N);
    EXPECT_TRUE(NearlyEqual(got, want, 1e-9))
        << k << " " << n << " " << K << " " << N << ": " << got << " vs "
        << want;
    got = static_cast<double>(-HypergeometricLogLowerTail(k, n, K, N) /
                              std::log(10.0L));
    want = testing::ExactMinusLog10LowerTail(k, n, K, N);
    EXPECT_TRUE(NearlyEqual(got, want, 1e-9))
        << k << " " << n << " " << K << " " << N << ": " << got << " vs "
        << want;
  }
}

TEST(HypergeometricTest, DomainErrors) {
  EXPECT_THROW(CheckHypergeometricDomain(1, 5, 3, 2), DomainError);
  EXPECT_THROW(CheckHypergeometricDomain(-1, 5, 3, 10), DomainError);
  EXPECT_THROW(CheckHypergeometricDomain(1, 11, 3, 10), DomainError);
  EXPECT_THROW(HypergeometricUpperTail(1, -5, 7, 10), DomainError);
}

TEST(HypergeometricTest, OutsideTheSupportHasZeroMass) {
  // With n=9 and K=3 among 10, at least 2 marked items are always drawn.
  EXPECT_EQ(HypergeometricLogPmf(1, 9, 3, 10),
            -std::numeric_limits<long double>::infinity());
  EXPECT_EQ(HypergeometricLowerTail(1, 9, 3, 10), 0.0);
  EXPECT_EQ(HypergeometricUpperTail(1, 9, 3, 10), 1.0);
  EXPECT_EQ(HypergeometricLogUpperTail(4, 5, 3, 10),
            -std::numeric_limits<long double>::infinity());
  EXPECT_EQ(HypergeometricLowerTail(4, 5, 3, 10), 1.0);
  // The linear-scale upper tail requires k <= min(n, K).
  EXPECT_THROW(HypergeometricUpperTail(4, 5, 3, 10), DomainError);
}

TEST(SpecificityTest, SignFollowsExpectedCount) {
  SpecificityScore over = Specificity(3, 5, 3, 10);
  EXPECT_EQ(over.direction, Direction::kOver);
  EXPECT_NEAR(over.score, 1.0792, 5e-5);

  SpecificityScore under = Specificity(0, 5, 3, 10);
  EXPECT_EQ(under.direction, Direction::kUnder);
  EXPECT_NEAR(under.score, -1.0792, 5e-5);

  // Exactly the expected count: f*T == F*t.
  SpecificityScore even = Specificity(1, 5, 2, 10);
  EXPECT_EQ(even.direction, Direction::kUnder);
  EXPECT_LE(even.score, 0);
}

TEST(SpecificityTest, CertainOutcomesScoreZero) {
  EXPECT_EQ(Specificity(4, 4, 4, 4).score, 0.0);
  EXPECT_FALSE(std::signbit(Specificity(0, 0, 3, 10).score));
  EXPECT_EQ(Specificity(0, 0, 3, 10).score, 0.0);
}

TEST(SpecificityTest, LargeCountsAreExactUntilTheCap) {
  // -log10 of the product of (1000 - i) / (10^6 - i) for i < 200.
  SpecificityScore score = Specificity(200, 1000, 200, 1000000);
  double want = 0;
  for (int i = 0; i < 200; ++i) {
    want -= std::log10((1000.0 - i) / (1000000.0 - i));
  }
  EXPECT_NEAR(score.score, want, 1e-6);
  EXPECT_NEAR(score.score, 609.27, 0.005);

  EXPECT_EQ(Specificity(500, 1000, 500, 1000000).score, kSpecificityCap);
  EXPECT_EQ(Specificity(0, 500000, 5000, 1000000).score, -kSpecificityCap);
}

TEST(SpecificityTest, AgreesWithExactOracle) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 3000; ++i) {
    int64_t T = 1 + rng() % 300;
    int64_t F = rng() % (T + 1);
    int64_t t = rng() % (T + 1);
    int64_t lo = std::max<int64_t>(0, t + F - T);
    int64_t hi = std::min(t, F);
    int64_t f = lo + rng() % (hi - lo + 1);
    double got = Specificity(f, t, F, T).score;
    double want = testing::ExactSpecificity(f, t, F, T);
    EXPECT_TRUE(NearlyEqual(got, want, 1e-9))
        << f << " " << t << " " << F << " " << T;
  }
}

TEST(SpecificityTest, OutOfDomainThrows) {
  EXPECT_THROW(Specificity(3, 2, 5, 10), DomainError);
  EXPECT_THROW(Specificity(3, 5, 2, 10), DomainError);
  EXPECT_THROW(Specificity(1, 5, 5, 4), DomainError);
  EXPECT_THROW(Specificity(0, 8, 5, 10), DomainError);
}

TEST(TokenizeTest, SplitsOnSpaceAndPunctuation) {
  EXPECT_EQ(Tokenize("Hello, world!"),
            (std::vector<std::string>{"Hello", ",", "world", "!"}));
  EXPECT_EQ(Tokenize("  \n\t "), std::vector<std::string>{});
  EXPECT_EQ(Tokenize("well-known 3.14 U.S"),
            (std::vector<std::string>{"well-known", "3.14", "U.S"}));
  EXPECT_EQ(Tokenize("«voilà»"), (std::vector<std::string>{"«", "voilà", "»"}));
}

TEST(TokenizeTest, EnglishCliticsAndNegation) {
  EXPECT_EQ(Tokenize("I've done it"),
            (std::vector<std::string>{"I", "'ve", "done", "it"}));
  EXPECT_EQ(Tokenize("don't"), (std::vector<std::string>{"do", "n't"}));
  EXPECT_EQ(Tokenize("it's"), (std::vector<std::string>{"it", "'s"}));
  EXPECT_EQ(Tokenize("can’t"), (std::vector<std::string>{"ca", "n't"}));
}

TEST(TokenizeTest, FrenchElisions) {
  EXPECT_EQ(Tokenize("l'article"), (std::vector<std::string>{"l'", "article"}));
  EXPECT_EQ(Tokenize("qu'il"), (std::vector<std::string>{"qu'", "il"}));
  EXPECT_EQ(Tokenize("aujourd'hui"), (std::vector<std::string>{"aujourd'hui"}));
}

TEST(TokenCountsTest, MergeMatchesSequentialAdds) {
  TokenCounts a, b, all;
  a.AddText("the cat the dog");
  b.AddText("the bird");
  all.AddText("the cat the dog the bird");
  TokenCounts ab = a, ba = b;
  ab.Merge(b);
  ba.Merge(a);
  EXPECT_EQ(ab.counts(), all.counts());
  EXPECT_EQ(ba.counts(), all.counts());
  EXPECT_EQ(ab.total(), 6);
  EXPECT_EQ(ab.Count("the"), 3);
  EXPECT_EQ(ab.Count("fish"), 0);
}

TEST(ScoreCountsTest, FiltersSortsAndTruncates) {
  TokenCounts part, whole;
  for (int i = 0; i < 20; ++i) part.Add("sorry");
  for (int i = 0; i < 5; ++i) part.Add("the");
  whole.Merge(part);
  for (int i = 0; i < 60; ++i) whole.Add("the");
  for (int i = 0; i < 20; ++i) whole.Add("article");
  whole.Add("rare");

  KeynessOptions options;
  std::vector<SpecificityScore> table = ScoreCounts(part, whole, options);
  ASSERT_EQ(table.size(), 3u);
  EXPECT_EQ(table[0].token, "sorry");
  EXPECT_EQ(table[0].direction, Direction::kOver);
  EXPECT_EQ(table[2].direction, Direction::kUnder);
  for (size_t i = 1; i < table.size(); ++i) {
    EXPECT_GE(table[i - 1].score, table[i].score);
  }
  for (const SpecificityScore &s : table) {
    EXPECT_EQ(s.t, part.total());
    EXPECT_EQ(s.T, whole.total());
  }

  options.min_frequency = 1;
  options.top_n = 2;
  options.jobs = 4;
  EXPECT_EQ(ScoreCounts(part, whole, options).size(), 2u);
  EXPECT_TRUE(ScoreCounts(TokenCounts{}, whole, options).empty());
}

Thread TwoAuthorThread(const std::string &id, const std::string &first,
                       const std::string &second, bool self) {
  Thread thread;
  thread.id = id;
  Post a, b;
  a.author = UserId{UserKind::kRegistered, "A"};
  b.author = UserId{UserKind::kRegistered, self ? "A" : "B"};
  a.is_signed = b.is_signed = true;
  a.body = first;
  b.body = second;
  thread.posts = {a, b};
  RenumberPosts(&thread);
  return thread;
}

TEST(KeynessTableTest, ReferenceSetsSelectDifferentWholes) {
  Corpus corpus;
  corpus.threads = {TwoAuthorThread("1", "question here", "oops sorry", true),
                    TwoAuthorThread("2", "other words", "reply text", false)};
  TokenCounts part, whole;
  CountKeynessTokens(corpus, ReferenceSet::kOnsetPairs, &part, &whole);
  EXPECT_EQ(part.total(), 2);
  EXPECT_EQ(whole.total(), 4);
  EXPECT_EQ(whole.Count("reply"), 0);

  TokenCounts part2, whole2;
  CountKeynessTokens(corpus, ReferenceSet::kWholeCorpus, &part2, &whole2, 3);
  EXPECT_EQ(part2.counts(), part.counts());
  EXPECT_EQ(whole2.total(), 8);
  EXPECT_EQ(whole2.Count("reply"), 1);

  EXPECT_EQ(ParseReferenceSet("corpus"), ReferenceSet::kWholeCorpus);
  EXPECT_EQ(ParseReferenceSet(ReferenceSetName(ReferenceSet::kOnsetPairs)),
            ReferenceSet::kOnsetPairs);
  EXPECT_THROW(ParseReferenceSet("nope"), Error);
}

TEST(KeynessTableTest, TsvHasHeaderAndFixedPrecision) {
  SpecificityScore s = Specificity(3, 5, 3, 10);
  s.token = "sorry";
  EXPECT_EQ(KeynessToTsv({s}),
            "token\tf\tt\tF\tT\tscore\tdirection\n"
            "sorry\t3\t5\t3\t10\t1.0792\tover\n");
}

}  // namespace
}  // namespace selfreply
