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

#include "selfreply/annotation-store.h"

#include <algorithm>
#include <filesystem>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include <gtest/gtest.h>

#include "selfreply/errors.h"
#include "selfreply/text-util.h"
#include "selfreply/thread-analysis.h"
#include "support/fixtures.h"
#include "support/synthetic.h"

namespace selfreply {
namespace {

AnnotationRecord Rec(const std::string &thread, const std::string &annotator,
                     CategoryLabel label,
                     std::optional<std::string> comment = std::nullopt) {
  AnnotationRecord record;
  record.thread_id = thread;
  record.annotator_id = annotator;
  record.label = label;
  record.noted_at = Timestamp::ParseIso("2026-03-01T12:00Z");
  record.comment = std::move(comment);
  return record;
}

TEST(AnnotationRecordTest, JsonRoundTrip) {
  AnnotationRecord record =
      Rec("Talk:X#h#1", "alice", CategoryLabel::kList, "two items");
  EXPECT_EQ(RecordFromJson(RecordToJson(record)), record);
  AnnotationRecord bare = Rec("t", "bob", CategoryLabel::kError);
  nlohmann::json json = RecordToJson(bare);
  EXPECT_EQ(json["label"], 8);
  EXPECT_EQ(RecordFromJson(json), bare);
  json["label"] = 0;
  EXPECT_THROW(RecordFromJson(json), Error);
  EXPECT_THROW(RecordFromJson(nlohmann::json{{"thread_id", "t"}}), Error);
}

TEST(AnnotationStoreTest, LaterRecordsSupersedeEarlierOnes) {
  AnnotationStore store({"a", "b"});
  EXPECT_TRUE(store.Record(Rec("a", "alice", CategoryLabel::kAddendum)));
  EXPECT_TRUE(store.Record(Rec("b", "alice", CategoryLabel::kSelfAnswer)));
  EXPECT_TRUE(store.Record(Rec("a", "bob", CategoryLabel::kChasingUp)));
  EXPECT_TRUE(store.Record(Rec("a", "alice", CategoryLabel::kList)));
  // Same label and comment as the current record: nothing is stored.
  EXPECT_FALSE(store.Record(Rec("a", "alice", CategoryLabel::kList)));
  EXPECT_TRUE(store.Record(Rec("a", "alice", CategoryLabel::kList, "why")));

  EXPECT_EQ(store.History().size(), 5u);
  std::vector<AnnotationRecord> current = store.Current();
  ASSERT_EQ(current.size(), 3u);
  EXPECT_EQ(current[0].thread_id, "a");
  EXPECT_EQ(current[0].annotator_id, "alice");
  EXPECT_EQ(current[0].label, CategoryLabel::kList);
  EXPECT_EQ(current[0].comment, "why");
  EXPECT_EQ(current[1].thread_id, "b");
  EXPECT_EQ(current[2].annotator_id, "bob");

  EXPECT_EQ(store.Latest("a", "bob")->label, CategoryLabel::kChasingUp);
  EXPECT_FALSE(store.Latest("b", "bob"));
  auto labels = store.LabelsOf("alice");
  EXPECT_EQ(labels.size(), 2u);
  EXPECT_EQ(labels["b"], CategoryLabel::kSelfAnswer);

  std::vector<std::string> lines = SplitLines(store.ExportJsonl());
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  ASSERT_EQ(lines.size(), 3u);
  EXPECT_EQ(RecordFromJson(nlohmann::json::parse(lines[0])), current[0]);
}

TEST(AnnotationStoreTest, RejectsInvalidRecords) {
  AnnotationStore store({"a"});
  EXPECT_THROW(store.Record(Rec("zzz", "alice", CategoryLabel::kAddendum)),
               UnknownThreadError);
  EXPECT_THROW(store.Record(Rec("a", "alice", CategoryLabel::kNull)),
               RejectedLabelError);
  EXPECT_THROW(store.Record(Rec("a", " ", CategoryLabel::kAddendum)),
               RejectedLabelError);
  EXPECT_TRUE(store.Record(Rec("a", "llm:mistral", CategoryLabel::kNull)));
  EXPECT_TRUE(store.Record(Rec("a", "alice", CategoryLabel::kError)));
  EXPECT_EQ(store.History().size(), 2u);
  EXPECT_TRUE(IsModelAnnotator("llm:x"));
  EXPECT_FALSE(IsModelAnnotator("gold"));
}

TEST(AnnotationStoreTest, LogSurvivesRestart) {
  std::string dir = testing::ScratchDirectory("store");
  std::string log = dir + "/annotations.jsonl";
  {
    AnnotationStore store({"a", "b"}, log);
    store.Record(Rec("a", "gold", CategoryLabel::kSelfCorrection));
    store.Record(Rec("b", "gold", CategoryLabel::kAddendum, "note"));
    store.Record(Rec("a", "gold", CategoryLabel::kSelfAnswer));
  }
  EXPECT_EQ(ReadAnnotationRecords(log).size(), 3u);
  {
    AnnotationStore store({"a", "b"}, log);
    EXPECT_EQ(store.History().size(), 3u);
    EXPECT_EQ(store.Latest("a", "gold")->label, CategoryLabel::kSelfAnswer);
    EXPECT_FALSE(
        store.Record(Rec("b", "gold", CategoryLabel::kAddendum, "note")));
    store.Record(Rec("b", "gold", CategoryLabel::kList));
  }
  EXPECT_EQ(ReadAnnotationRecords(log).size(), 4u);

  // A log naming threads outside the corpus is refused.
  EXPECT_THROW(AnnotationStore({"a"}, log), UnknownThreadError);

  WriteFile(
      dir + "/bad.jsonl",
      RecordToJson(Rec("a", "x", CategoryLabel::kList)).dump() + "\n{broken\n");
  try {
    ReadAnnotationRecords(dir + "/bad.jsonl");
    FAIL() << "expected FormatError";
  } catch (const FormatError &e) {
    EXPECT_EQ(e.line(), 2);
  }
  std::filesystem::remove_all(dir);
}

TEST(AnnotationStoreTest, ConcurrentWritersAndReaders) {
  std::unordered_set<std::string> ids;
  for (int i = 0; i < 50; ++i) ids.insert("t" + std::to_string(i));
  AnnotationStore store(ids);
  std::vector<std::thread> workers;
  for (int w = 0; w < 4; ++w) {
    workers.emplace_back([&, w] {
      for (int i = 0; i < 50; ++i) {
        store.Record(Rec("t" + std::to_string(i), "a" + std::to_string(w),
                         *LabelFromNumber(1 + (i + w) % 7)));
        store.Current();
      }
    });
  }
  for (std::thread &t : workers) t.join();
  EXPECT_EQ(store.History().size(), 200u);
  EXPECT_EQ(store.Current().size(), 200u);
}

Corpus OnsetCorpus(int onset, int other) {
  Corpus corpus;
  for (int i = 0; i < onset + other; ++i) {
    Thread thread;
    thread.id = "t" + std::to_string(i);
    for (const char *author : {"A", i < onset ? "A" : "B"}) {
      Post post;
      post.author = UserId{UserKind::kRegistered, author};
      post.is_signed = true;
      post.body = "x";
      thread.posts.push_back(post);
    }
    RenumberPosts(&thread);
    corpus.threads.push_back(thread);
  }
  return corpus;
}

TEST(SampleThreadsTest, DrawsOnlyOnsetThreadsWithoutReplacement) {
  Corpus corpus = testing::RandomPatternCorpus(2000, 13);
  std::set<std::string> eligible;
  for (const Thread &thread : corpus.threads) {
    if (StartsWithSelfReply(thread)) eligible.insert(thread.id);
  }
  ASSERT_GE(eligible.size(), 100u);
  Sample sample = SampleThreads(corpus, 100, 7);
  EXPECT_EQ(sample.n, 100u);
  EXPECT_EQ(sample.seed, 7u);
  std::set<std::string> drawn(sample.thread_ids.begin(),
                              sample.thread_ids.end());
  EXPECT_EQ(drawn.size(), 100u);
  for (const std::string &id : drawn) EXPECT_TRUE(eligible.count(id)) << id;

  EXPECT_EQ(SampleThreads(corpus, 100, 7), sample);
  EXPECT_NE(SampleThreads(corpus, 100, 8).thread_ids, sample.thread_ids);
  // Growing n extends the same draw.
  Sample larger = SampleThreads(corpus, 101, 7);
  EXPECT_TRUE(std::equal(sample.thread_ids.begin(), sample.thread_ids.end(),
                         larger.thread_ids.begin()));
}

TEST(SampleThreadsTest, FixedDrawForFixedSeed) {
  // Expected ids computed by a separate MT19937-64 implementation running
  // the same rejection sampling and partial Fisher-Yates shuffle.
  Sample sample = SampleThreads(OnsetCorpus(10, 5), 4, 42);
  EXPECT_EQ(sample, SampleThreads(OnsetCorpus(10, 5), 4, 42));
  EXPECT_EQ(sample.thread_ids,
            (std::vector<std::string>{"t6", "t0", "t4", "t7"}));
}

TEST(SampleThreadsTest, InsufficientPopulation) {
  try {
    SampleThreads(OnsetCorpus(3, 10), 4, 1);
    FAIL() << "expected InsufficientPopulationError";
  } catch (const InsufficientPopulationError &e) {
    EXPECT_EQ(e.requested(), 4u);
    EXPECT_EQ(e.available(), 3u);
  }
  EXPECT_EQ(SampleThreads(OnsetCorpus(3, 10), 3, 1).thread_ids.size(), 3u);
  EXPECT_TRUE(SampleThreads(OnsetCorpus(0, 3), 0, 1).thread_ids.empty());
}

TEST(SampleFileTest, JsonlRoundTrip) {
  Sample sample = SampleThreads(OnsetCorpus(20, 0), 12, 99);
  std::string jsonl = SampleToJsonl(sample);
  EXPECT_EQ(jsonl.substr(0, jsonl.find('\n')), "{\"seed\":99,\"n\":12}");
  EXPECT_EQ(ParseSample(jsonl, "s"), sample);

  std::string dir = testing::ScratchDirectory("sample");
  WriteFile(dir + "/s.jsonl", jsonl);
  EXPECT_EQ(ReadSample(dir + "/s.jsonl"), sample);
  std::filesystem::remove_all(dir);

  EXPECT_THROW(ParseSample("{\"seed\":1,\"n\":2}\n{\"thread_id\":\"a\"}\n"
                           "{\"thread_id\":\"a\"}\n",
                           "dup"),
               Error);
  EXPECT_THROW(
      ParseSample("{\"seed\":1,\"n\":3}\n{\"thread_id\":\"a\"}\n", "n"), Error);
}

TEST(GoldTest, FromStoreExportAndImport) {
  AnnotationStore store({"a", "b", "c"});
  store.Record(Rec("a", "gold", CategoryLabel::kAddendum));
  store.Record(Rec("b", "gold", CategoryLabel::kError));
  store.Record(Rec("c", "alice", CategoryLabel::kList));
  store.Record(Rec("a", "gold", CategoryLabel::kSelfAnswer));
  GoldDataset gold = GoldFromStore(store, "en", "sample.jsonl");
  EXPECT_EQ(gold.entries.size(), 2u);
  EXPECT_EQ(gold.entries["a"], CategoryLabel::kSelfAnswer);
  EXPECT_EQ(gold.language, "en");

  std::string exported = ExportGold(gold);
  EXPECT_EQ(exported,
            "{\"language\":\"en\",\"source_sample\":\"sample.jsonl\"}\n"
            "{\"thread_id\":\"a\",\"label\":3}\n"
            "{\"thread_id\":\"b\",\"label\":8}\n");
  EXPECT_EQ(ImportGold(exported, "g"), gold);

  // Annotation records: the gold annotator wins by default.
  GoldDataset from_records = ImportGold(store.ExportJsonl(), "records");
  EXPECT_EQ(from_records.entries, gold.entries);
  GoldDataset alice = ImportGold(store.ExportJsonl(), "records", "alice");
  EXPECT_EQ(alice.entries.size(), 1u);

  LabelCounts counts = LabelDistribution(gold);
  EXPECT_EQ(counts[3], 1);
  EXPECT_EQ(counts[8], 1);
  EXPECT_EQ(counts[1], 0);
}

TEST(GoldTest, ImportRejectsBadInput) {
  EXPECT_THROW(ImportGold("{\"thread_id\":\"a\",\"label\":9}\n", "null"),
               FormatError);
  EXPECT_THROW(ImportGold("{\"thread_id\":\"a\",\"label\":1}\n"
                          "{\"thread_id\":\"a\",\"label\":2}\n",
                          "dup"),
               DuplicateIdError);
  AnnotationStore store({"a"});
  store.Record(Rec("a", "x", CategoryLabel::kList));
  store.Record(Rec("a", "y", CategoryLabel::kList));
  EXPECT_THROW(ImportGold(store.ExportJsonl(), "two annotators"), Error);
}

TEST(GoldTest, ValidateAgainstCorpus) {
  Corpus corpus = OnsetCorpus(2, 0);
  GoldDataset gold;
  gold.entries = {{"t0", CategoryLabel::kAddendum}};
  EXPECT_NO_THROW(ValidateGold(gold, corpus));
  gold.entries["t9"] = CategoryLabel::kAddendum;
  EXPECT_THROW(ValidateGold(gold, corpus), UnknownThreadError);
  gold.entries.erase("t9");
  gold.entries["t1"] = CategoryLabel::kNull;
  EXPECT_THROW(ValidateGold(gold, corpus), RejectedLabelError);
}

}  // namespace
}  // namespace selfreply
