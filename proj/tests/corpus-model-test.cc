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

#include "selfreply/corpus-model.h"

#include <vector>

#include <gtest/gtest.h>

#include "selfreply/errors.h"
#include "support/fixtures.h"

namespace selfreply {
namespace {

TEST(NormalizeAuthorTest, ClassifiesIpAddresses) {
  EXPECT_EQ(NormalizeAuthor("198.6.46.11"),
            (UserId{UserKind::kIp, "198.6.46.11"}));
  EXPECT_EQ(NormalizeAuthor(" 10.0.0.1 "), (UserId{UserKind::kIp, "10.0.0.1"}));
  // IPv6 text is canonicalized so that equal addresses compare equal.
  EXPECT_EQ(NormalizeAuthor("2001:db8:0:0::1"), NormalizeAuthor("2001:DB8::1"));
  EXPECT_EQ(NormalizeAuthor("2001:db8::1").kind, UserKind::kIp);
}

TEST(NormalizeAuthorTest, RegisteredNamesGetMediaWikiNormalization) {
  EXPECT_EQ(NormalizeAuthor("gurdjieff"),
            (UserId{UserKind::kRegistered, "Gurdjieff"}));
  EXPECT_EQ(NormalizeAuthor("Til_Eulenspiegel"),
            (UserId{UserKind::kRegistered, "Til Eulenspiegel"}));
  EXPECT_EQ(NormalizeAuthor("  Til   Eulenspiegel "),
            (UserId{UserKind::kRegistered, "Til Eulenspiegel"}));
  // Only the first letter is case-insensitive.
  EXPECT_NE(NormalizeAuthor("AnnSmith"), NormalizeAuthor("Annsmith"));
  EXPECT_EQ(NormalizeAuthor("élodie").value, "Élodie");
}

TEST(NormalizeAuthorTest, DetectsBots) {
  EXPECT_EQ(NormalizeAuthor("ExampleBot"),
            (UserId{UserKind::kBot, "ExampleBot"}));
  // Not caught by the suffix heuristic alone.
  EXPECT_EQ(NormalizeAuthor("Lowercase sigmabot III").kind,
            UserKind::kRegistered);
  EXPECT_EQ(NormalizeAuthor("Abbott").kind, UserKind::kRegistered);

  BotRuleset strict;
  strict.set_suffix_heuristic(false);
  strict.AddName("Helper");
  EXPECT_EQ(NormalizeAuthor("ExampleBot", strict).kind, UserKind::kRegistered);
  EXPECT_EQ(NormalizeAuthor("helper", strict).kind, UserKind::kBot);
}

TEST(NormalizeAuthorTest, RejectsEmptyInput) {
  EXPECT_THROW(NormalizeAuthor(""), InvalidAuthorError);
  EXPECT_THROW(NormalizeAuthor(" \t "), InvalidAuthorError);
  EXPECT_THROW(NormalizeAuthor("___"), InvalidAuthorError);
}

TEST(NormalizeAuthorTest, IsIdempotent) {
  for (const char *raw : {"198.6.46.11", "gurdjieff", "Til_Eulenspiegel",
                          "ExampleBot", "2001:db8::1", "zoë", "R2 D2"}) {
    UserId once = NormalizeAuthor(raw);
    EXPECT_EQ(NormalizeAuthor(once.value), once) << raw;
  }
}

TEST(SameAuthorTest, KindsNeverMatchAcrossEachOther) {
  EXPECT_TRUE(SameAuthor({UserKind::kIp, "198.6.46.11"},
                         {UserKind::kIp, "198.6.46.11"}));
  EXPECT_TRUE(SameAuthor({UserKind::kRegistered, "Gurdjieff"},
                         {UserKind::kRegistered, "Gurdjieff"}));
  EXPECT_FALSE(SameAuthor({UserKind::kRegistered, "1.2.3.4"},
                          {UserKind::kIp, "1.2.3.4"}));
}

TEST(SameAuthorTest, IsAnEquivalenceRelation) {
  std::vector<UserId> ids = {
      NormalizeAuthor("a"),
      NormalizeAuthor("A"),
      NormalizeAuthor("b"),
      NormalizeAuthor("1.2.3.4"),
      {UserKind::kRegistered, "1.2.3.4"},
      NormalizeAuthor("SineBot"),
  };
  for (const UserId &a : ids) {
    EXPECT_TRUE(SameAuthor(a, a));
    for (const UserId &b : ids) {
      EXPECT_EQ(SameAuthor(a, b), SameAuthor(b, a));
      for (const UserId &c : ids) {
        if (SameAuthor(a, b) && SameAuthor(b, c)) {
          EXPECT_TRUE(SameAuthor(a, c));
        }
      }
    }
  }
}

TEST(BotRulesetTest, LoadsNameList) {
  BotRuleset bots =
      BotRuleset::LoadFile(std::string(SELFREPLY_DATA_DIR) + "/bots.txt");
  EXPECT_TRUE(bots.IsBot("ClueBot NG"));
  EXPECT_TRUE(bots.IsBot("Salebot"));
  EXPECT_EQ(NormalizeAuthor("Lowercase sigmabot III", bots).kind,
            UserKind::kBot);
  EXPECT_FALSE(bots.IsBot("Gurdjieff"));
}

TEST(LanguageTest, TagsRoundTrip) {
  for (Language language : {Language::kEn, Language::kFr, Language::kDe}) {
    EXPECT_EQ(ParseLanguage(LanguageTag(language)), language);
  }
  EXPECT_THROW(ParseLanguage("it"), Error);
}

TEST(ThreadIdTest, CombinesPageHeadingAndOccurrence) {
  EXPECT_EQ(MakeThreadId("Talk:Uruk", "edits for clarity", 1),
            "Talk:Uruk#edits for clarity#1");
  EXPECT_EQ(MakeThreadId("Talk:Uruk", "edits for clarity", 2),
            "Talk:Uruk#edits for clarity#2");
}

Thread MakeThread(const std::string &id, int posts) {
  Thread thread;
  thread.id = id;
  for (int i = 0; i < posts; ++i) {
    Post post;
    post.author = UserId{UserKind::kRegistered, "A"};
    post.is_signed = true;
    thread.posts.push_back(post);
  }
  RenumberPosts(&thread);
  return thread;
}

TEST(ValidateCorpusTest, AcceptsWellFormedCorpus) {
  Corpus corpus;
  corpus.threads = {MakeThread("a", 3), MakeThread("b", 1)};
  EXPECT_NO_THROW(ValidateCorpus(corpus));
  EXPECT_EQ(corpus.threads[0].posts[2].position, 2);
}

TEST(ValidateCorpusTest, RejectsBrokenInvariants) {
  Corpus duplicate;
  duplicate.threads = {MakeThread("a", 1), MakeThread("a", 1)};
  EXPECT_THROW(ValidateCorpus(duplicate), DuplicateIdError);

  Corpus positions;
  positions.threads = {MakeThread("a", 2)};
  positions.threads[0].posts[1].position = 5;
  EXPECT_THROW(ValidateCorpus(positions), Error);

  Corpus language;
  language.threads = {MakeThread("a", 1)};
  language.threads[0].language = Language::kFr;
  EXPECT_THROW(ValidateCorpus(language), Error);

  Corpus empty_unsigned;
  empty_unsigned.threads = {MakeThread("a", 1)};
  empty_unsigned.threads[0].posts[0] = Post{};
  EXPECT_THROW(ValidateCorpus(empty_unsigned), Error);
}

}  // namespace
}  // namespace selfreply
