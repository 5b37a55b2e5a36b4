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

// Sources of raw talk pages: MediaWiki XML dumps and directories of
// .wiki files.

#ifndef SELFREPLY_DUMP_READER_H_
#define SELFREPLY_DUMP_READER_H_

#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "selfreply/wikitext.h"

namespace selfreply {

// Streams <page> elements from a MediaWiki XML export. Pages are read one
// at a time, so dumps larger than memory can be processed. Each page's text
// is the last revision's <text>.
class DumpReader {
 public:
  // namespace_filter: only pages with this <ns> are returned; nullopt
  // returns every page.
  DumpReader(std::istream *input, Language language,
             std::optional<int> namespace_filter = 1);

  // Next page, or nullopt at end of input. Throws XmlParseError when a
  // page element is ill-formed.
  std::optional<RawPage> Next();

 private:
  bool Fill();

  std::istream *input_;
  Language language_;
  std::optional<int> namespace_filter_;
  std::string buffer_;
  bool eof_ = false;
};

// Reads every *.wiki file of a directory (sorted by name). The title is the
// file name without extension, underscores read as spaces.
std::vector<RawPage> ReadWikiDirectory(const std::string &dir,
                                       Language language);

}  // namespace selfreply

#endif  // SELFREPLY_DUMP_READER_H_
