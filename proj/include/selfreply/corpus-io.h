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

// JSON Lines interchange format for corpora. One thread per line:
//
//   {"id": ..., "page": ..., "language": "en", "heading": ...,
//    "posts": [{"author": {"kind": "ip", "value": "198.6.46.11"} | null,
//               "when": "2008-09-02T17:29Z" | null,
//               "body": ..., "signed": true}, ...]}
//
// Post positions are implied by array order.

#ifndef SELFREPLY_CORPUS_IO_H_
#define SELFREPLY_CORPUS_IO_H_

#include <istream>
#include <ostream>
#include <string>

#include "json.hpp"
#include "selfreply/corpus-model.h"

namespace selfreply {

nlohmann::ordered_json ThreadToJson(const Thread &thread);
// Throws Error on missing or mistyped fields.
Thread ThreadFromJson(const nlohmann::json &value);

// Serializes one thread as a single JSONL line (no trailing newline).
std::string ThreadToJsonLine(const Thread &thread);

void WriteCorpus(const Corpus &corpus, std::ostream &out);
void WriteCorpus(const Corpus &corpus, const std::string &path);

// Reads a JSONL corpus. The corpus language is the language of its
// threads; an empty file yields an empty corpus in default_language.
// Throws FormatError naming the offending line, DuplicateIdError on
// repeated ids and Error on mixed languages.
Corpus ReadCorpus(std::istream &in, const std::string &name,
                  Language default_language = Language::kEn);
Corpus ReadCorpus(const std::string &path,
                  Language default_language = Language::kEn);

}  // namespace selfreply

#endif  // SELFREPLY_CORPUS_IO_H_
