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

// Reader for a subset of TEI CMC-core: <div> elements holding <post>
// elements. A div becomes a thread when it has type="thread" or directly
// contains posts; its <head> child gives the heading. Posts take their
// author from "who" (a leading '#' is dropped) and their date from "when"
// (ISO 8601). Text content of each post, with paragraph breaks as
// newlines and each line trimmed, is the body. Other elements are ignored.

#ifndef SELFREPLY_TEI_H_
#define SELFREPLY_TEI_H_

#include <string>
#include <string_view>

#include "selfreply/corpus-model.h"
#include "selfreply/wikitext.h"

namespace selfreply {

struct TeiOptions {
  // Used when the document has no xml:lang attribute on the root or text.
  Language language = Language::kEn;
  // Page title when the header has no <title>.
  std::string page;
  BotRuleset bots = BotRuleset::Default();
};

// Throws XmlParseError on ill-formed input.
TalkPage ParseTei(std::string_view xml, const TeiOptions &options = {});

}  // namespace selfreply

#endif  // SELFREPLY_TEI_H_
