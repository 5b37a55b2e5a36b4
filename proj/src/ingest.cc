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

#include "selfreply/ingest.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <unordered_set>

#include "selfreply/dump-reader.h"
#include "selfreply/errors.h"
#include "selfreply/parallel.h"
#include "selfreply/tei.h"
#include "selfreply/text-util.h"

namespace selfreply {

namespace fs = std::filesystem;

namespace {

constexpr size_t kDumpBatch = 256;

class IdRegistry {
 public:
  explicit IdRegistry(const Corpus &corpus) {
    for (const Thread &thread : corpus.threads) ids_.insert(thread.id);
  }
  void Add(const Thread &thread) {
    if (!ids_.insert(thread.id).second) throw DuplicateIdError(thread.id);
  }

 private:
  std::unordered_set<std::string> ids_;
};

}  // namespace

InputFormat ParseInputFormat(std::string_view name) {
  if (name == "auto") return InputFormat::kAuto;
  if (name == "wiki") return InputFormat::kWiki;
  if (name == "dir") return InputFormat::kWikiDirectory;
  if (name == "dump") return InputFormat::kDump;
  if (name == "tei") return InputFormat::kTei;
  throw Error("unknown input format: " + std::string(name));
}

InputFormat DetectInputFormat(const std::string &path) {
  if (fs::is_directory(path)) return InputFormat::kWikiDirectory;
  std::string extension = ToLowerAscii(fs::path(path).extension().string());
  if (extension == ".tei") return InputFormat::kTei;
  if (extension == ".xml") {
    std::ifstream in(path, std::ios::binary);
    std::string head(4096, '\0');
    in.read(head.data(), head.size());
    head.resize(in.gcount());
    if (head.find("<TEI") != std::string::npos) return InputFormat::kTei;
    return InputFormat::kDump;
  }
  return InputFormat::kWiki;
}

void AppendPages(const std::vector<RawPage> &pages, const LocaleProfile &locale,
                 const BotRuleset &bots, int jobs, Corpus *corpus) {
  std::vector<TalkPage> parsed =
      ParallelMap(pages, jobs, [&](const RawPage &page) {
        TalkPage talk = ParseTalkWikitext(page, locale, bots);
        talk.layout.clear();
        return talk;
      });
  IdRegistry ids(*corpus);
  for (TalkPage &talk : parsed) {
    for (Thread &thread : talk.threads) {
      ids.Add(thread);
      corpus->threads.push_back(std::move(thread));
    }
  }
}

Corpus IngestPaths(const std::vector<std::string> &paths,
                   const LocaleProfile &locale, const IngestOptions &options,
                   size_t *pages) {
  Corpus corpus;
  corpus.language = options.language;
  size_t count = 0;
  auto report = [&](size_t added) {
    count += added;
    if (options.progress) options.progress(count);
  };
  for (const std::string &path : paths) {
    if (!fs::exists(path)) throw Error("no such input: " + path);
    InputFormat format = options.format == InputFormat::kAuto
                             ? DetectInputFormat(path)
                             : options.format;
    switch (format) {
      case InputFormat::kWikiDirectory: {
        std::vector<RawPage> batch = ReadWikiDirectory(path, options.language);
        AppendPages(batch, locale, options.bots, options.jobs, &corpus);
        report(batch.size());
        break;
      }
      case InputFormat::kWiki: {
        RawPage page;
        page.title = fs::path(path).stem().string();
        std::replace(page.title.begin(), page.title.end(), '_', ' ');
        page.wikitext = ReadFile(path);
        page.language = options.language;
        AppendPages({page}, locale, options.bots, options.jobs, &corpus);
        report(1);
        break;
      }
      case InputFormat::kDump: {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw Error("cannot open " + path);
        DumpReader reader(&in, options.language, options.dump_namespace);
        std::vector<RawPage> batch;
        while (true) {
          std::optional<RawPage> page = reader.Next();
          if (page) batch.push_back(std::move(*page));
          if (batch.size() == kDumpBatch || (!page && !batch.empty())) {
            AppendPages(batch, locale, options.bots, options.jobs, &corpus);
            report(batch.size());
            batch.clear();
          }
          if (!page) break;
        }
        break;
      }
      case InputFormat::kTei: {
        TeiOptions tei;
        tei.language = options.language;
        tei.page = fs::path(path).stem().string();
        tei.bots = options.bots;
        TalkPage talk = ParseTei(ReadFile(path), tei);
        IdRegistry ids(corpus);
        for (Thread &thread : talk.threads) {
          if (thread.language != corpus.language) {
            throw Error(path + ": document language " +
                        LanguageTag(thread.language) +
                        " differs from the corpus language " +
                        LanguageTag(corpus.language));
          }
          ids.Add(thread);
          corpus.threads.push_back(std::move(thread));
        }
        report(1);
        break;
      }
      case InputFormat::kAuto:
        break;
    }
  }
  if (pages != nullptr) *pages = count;
  return corpus;
}

}  // namespace selfreply
