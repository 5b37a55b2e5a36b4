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

// TEI reading, dump streaming and the ingest driver.

#include "selfreply/ingest.h"

#include <filesystem>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "selfreply/dump-reader.h"
#include "selfreply/errors.h"
#include "selfreply/tei.h"
#include "selfreply/text-util.h"
#include "selfreply/thread-analysis.h"
#include "support/fixtures.h"
#include "support/synthetic.h"

namespace selfreply {
namespace {

using testing::Locale;
using testing::ScratchDirectory;
using testing::TestDataPath;

TEST(ParseTeiTest, ThreadsPostsAndAttributes) {
  TalkPage page = ParseTei(ReadFile(TestDataPath("tei/self-reply.xml")));
  EXPECT_EQ(page.title, "Discussion:Uruk");
  ASSERT_EQ(page.threads.size(), 2u);

  const Thread &first = page.threads[0];
  EXPECT_EQ(first.heading, "Modifications");
  EXPECT_EQ(first.language, Language::kFr);
  EXPECT_EQ(first.id, "Discussion:Uruk#Modifications#1");
  ASSERT_EQ(first.posts.size(), 2u);
  EXPECT_EQ(first.posts[0].author, (UserId{UserKind::kRegistered, "A"}));
  EXPECT_EQ(first.posts[0].when->ToIso(), "2008-08-19T04:12Z");
  EXPECT_EQ(first.posts[1].body,
            "Autres corrections & ajouts.\nSecond paragraphe.");
  EXPECT_TRUE(StartsWithSelfReply(first));

  const Thread &second = page.threads[1];
  ASSERT_EQ(second.posts.size(), 2u);
  EXPECT_TRUE(second.posts[0].is_signed);
  EXPECT_FALSE(second.posts[0].when);
  EXPECT_FALSE(second.posts[1].author);
  EXPECT_FALSE(second.posts[1].is_signed);
}

TEST(ParseTeiTest, EmptyRootHasNoThreads) {
  EXPECT_TRUE(
      ParseTei(ReadFile(TestDataPath("tei/empty.xml"))).threads.empty());
}

TEST(ParseTeiTest, IllFormedXmlReportsPosition) {
  try {
    ParseTei(ReadFile(TestDataPath("tei/broken.xml")));
    FAIL() << "expected XmlParseError";
  } catch (const XmlParseError &e) {
    EXPECT_EQ(e.line(), 4);
    EXPECT_GT(e.column(), 0);
  }
}

TEST(ParseTeiTest, OptionsSupplyMissingMetadata) {
  TeiOptions options;
  options.language = Language::kDe;
  options.page = "Diskussion:X";
  TalkPage page = ParseTei(
      "<TEI><text><div><post who='A' when='2010-05-01T10:00Z'>Hallo</post>"
      "</div></text></TEI>",
      options);
  ASSERT_EQ(page.threads.size(), 1u);
  EXPECT_EQ(page.threads[0].language, Language::kDe);
  EXPECT_EQ(page.threads[0].page, "Diskussion:X");
}

TEST(DumpReaderTest, StreamsTalkPagesOnly) {
  std::string xml =
      "<mediawiki>\n"
      "<page><title>Eugene, Oregon</title><ns>0</ns><revision><text>"
      "article</text></revision></page>\n"
      "<page><title>Talk:Eugene, Oregon</title><ns>1</ns><revision><text "
      "xml:space=\"preserve\">== Rose McGowan? ==\n"
      "Q &amp; A [[User:A|A]] 10:00, 1 May 2010 "
      "(UTC)</text></revision></page>\n"
      "</mediawiki>\n";
  std::istringstream in(xml);
  DumpReader reader(&in, Language::kEn);
  auto page = reader.Next();
  ASSERT_TRUE(page);
  EXPECT_EQ(page->title, "Talk:Eugene, Oregon");
  EXPECT_NE(page->wikitext.find("Q & A"), std::string::npos);
  EXPECT_FALSE(reader.Next());

  std::istringstream all_in(xml);
  DumpReader all(&all_in, Language::kEn, std::nullopt);
  int count = 0;
  while (all.Next()) count++;
  EXPECT_EQ(count, 2);
}

TEST(DumpReaderTest, GeneratedDumpRoundTripsPageText) {
  std::mt19937_64 rng(8);
  std::vector<RawPage> pages;
  for (int i = 0; i < 20; ++i) {
    pages.push_back(testing::GenerateTalkPage(rng, Locale(Language::kEn),
                                              "Talk:D " + std::to_string(i))
                        .page);
  }
  std::istringstream in(testing::DumpXml(pages));
  DumpReader reader(&in, Language::kEn);
  for (const RawPage &want : pages) {
    auto got = reader.Next();
    ASSERT_TRUE(got);
    EXPECT_EQ(got->title, want.title);
    EXPECT_EQ(got->wikitext, want.wikitext);
  }
  EXPECT_FALSE(reader.Next());
}

TEST(DetectInputFormatTest, UsesExtensionsAndContent) {
  std::string dir = ScratchDirectory("detect");
  WriteFile(dir + "/a.wiki", "== x ==\n");
  WriteFile(dir + "/dump.xml", "<mediawiki></mediawiki>");
  WriteFile(dir + "/doc.xml", "<?xml version='1.0'?>\n<TEI></TEI>");
  WriteFile(dir + "/doc.tei", "<TEI></TEI>");
  EXPECT_EQ(DetectInputFormat(dir), InputFormat::kWikiDirectory);
  EXPECT_EQ(DetectInputFormat(dir + "/a.wiki"), InputFormat::kWiki);
  EXPECT_EQ(DetectInputFormat(dir + "/dump.xml"), InputFormat::kDump);
  EXPECT_EQ(DetectInputFormat(dir + "/doc.xml"), InputFormat::kTei);
  EXPECT_EQ(DetectInputFormat(dir + "/doc.tei"), InputFormat::kTei);
  std::filesystem::remove_all(dir);
  EXPECT_EQ(ParseInputFormat("dump"), InputFormat::kDump);
  EXPECT_THROW(ParseInputFormat("csv"), Error);
}

TEST(IngestPathsTest, MixesSourcesIntoOneCorpus) {
  std::string dir = ScratchDirectory("ingest");
  std::filesystem::create_directories(dir + "/pages");
  std::filesystem::copy_file(TestDataPath("self-answer.wiki"),
                             dir + "/pages/Talk_Eugene.wiki");
  std::filesystem::copy_file(TestDataPath("uruk-edits.wiki"),
                             dir + "/pages/Talk_Uruk.wiki");
  WriteFile(
      dir + "/dump.xml",
      testing::DumpXml({{"Talk:Sheba", ReadFile(TestDataPath("sheba.wiki")),
                         Language::kEn}}));
  size_t pages = 0;
  size_t progress_calls = 0;
  IngestOptions options;
  options.jobs = 3;
  options.progress = [&](size_t) { progress_calls++; };
  Corpus corpus = IngestPaths({dir + "/pages", dir + "/dump.xml"},
                              Locale(Language::kEn), options, &pages);
  EXPECT_EQ(pages, 3u);
  EXPECT_GT(progress_calls, 0u);
  ASSERT_EQ(corpus.threads.size(), 3u);
  EXPECT_EQ(corpus.threads[0].page, "Talk Eugene");
  EXPECT_EQ(corpus.threads[1].page, "Talk Uruk");
  EXPECT_EQ(corpus.threads[2].page, "Talk:Sheba");
  EXPECT_NO_THROW(ValidateCorpus(corpus));

  // The same page twice yields duplicate thread ids.
  EXPECT_THROW(IngestPaths({dir + "/pages", dir + "/pages"},
                           Locale(Language::kEn), options),
               DuplicateIdError);
  std::filesystem::remove_all(dir);
}

TEST(IngestPathsTest, TeiLanguageMustMatch) {
  IngestOptions options;
  options.language = Language::kEn;
  EXPECT_THROW(IngestPaths({TestDataPath("tei/self-reply.xml")},
                           Locale(Language::kEn), options),
               Error);
  options.language = Language::kFr;
  Corpus corpus = IngestPaths({TestDataPath("tei/self-reply.xml")},
                              Locale(Language::kFr), options);
  EXPECT_EQ(corpus.threads.size(), 2u);
  EXPECT_EQ(corpus.language, Language::kFr);
}

TEST(IngestPathsTest, ParallelAndSerialAgree) {
  std::mt19937_64 rng(12);
  std::vector<RawPage> pages;
  for (int i = 0; i < 60; ++i) {
    pages.push_back(testing::GenerateTalkPage(rng, Locale(Language::kEn),
                                              "Talk:Q " + std::to_string(i))
                        .page);
  }
  Corpus serial, parallel;
  AppendPages(pages, Locale(Language::kEn), BotRuleset::Default(), 1, &serial);
  AppendPages(pages, Locale(Language::kEn), BotRuleset::Default(), 8,
              &parallel);
  EXPECT_EQ(serial, parallel);
  EXPECT_FALSE(serial.threads.empty());
}

}  // namespace
}  // namespace selfreply
