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

// Turns raw sources (wikitext pages, dumps, TEI files) into a corpus.

#ifndef SELFREPLY_INGEST_H_
#define SELFREPLY_INGEST_H_

#include <functional>
#include <string>
#include <vector>

#include "selfreply/corpus-model.h"
#include "selfreply/locale-profile.h"
#include "selfreply/wikitext.h"

namespace selfreply {

enum class InputFormat { kAuto, kWiki, kWikiDirectory, kDump, kTei };

InputFormat ParseInputFormat(std::string_view name);

// Guesses the format of a path: directories hold .wiki files, .xml files
// are dumps unless they contain a TEI root, anything else is one page of
// wikitext.
InputFormat DetectInputFormat(const std::string &path);

struct IngestOptions {
  Language language = Language::kEn;
  InputFormat format = InputFormat::kAuto;
  BotRuleset bots = BotRuleset::Default();
  int jobs = 1;
  // Dump namespace to keep; nullopt keeps every page.
  std::optional<int> dump_namespace = 1;
  // Called with the number of pages parsed so far.
  std::function<void(size_t pages)> progress;
};

// Parses pages in parallel and appends their threads in page order.
// Throws DuplicateIdError when two pages yield the same thread id.
void AppendPages(const std::vector<RawPage> &pages, const LocaleProfile &locale,
                 const BotRuleset &bots, int jobs, Corpus *corpus);

// Reads every input path into one corpus. Returns the number of pages or
// TEI documents read through *pages when given.
Corpus IngestPaths(const std::vector<std::string> &paths,
                   const LocaleProfile &locale, const IngestOptions &options,
                   size_t *pages = nullptr);

}  // namespace selfreply

#endif  // SELFREPLY_INGEST_H_
