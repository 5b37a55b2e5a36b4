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

// Segmentation of talk page wikitext into threads and signed posts.
//
// Threads start at level-2 headings ("== Title =="); text before the first
// heading is page boilerplate and is skipped. Inside a thread every
// signature closes a post: the post body is the text between the previous
// signature and this one. Text after the last signature becomes an
// unsigned post. HTML comments and <nowiki> spans are masked before
// scanning so that their content never yields headings or signatures.

#ifndef SELFREPLY_WIKITEXT_H_
#define SELFREPLY_WIKITEXT_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "selfreply/corpus-model.h"
#include "selfreply/locale-profile.h"

namespace selfreply {

struct RawPage {
  std::string title;
  std::string wikitext;
  Language language = Language::kEn;
};

// A signature found in a line of wikitext. [begin, end) is a byte span of
// the scanned text covering the whole signature, including a leading
// "--" and the trailing time zone label.
struct Signature {
  UserId author;
  std::optional<Timestamp> when;  // absent: signed but undated
  size_t begin = 0;
  size_t end = 0;
};

// Finds the last signature in a single line: a user, user talk or
// contributions link, or a bare IP address followed by a talk link, then a
// timestamp in one of the locale layouts. A user link closing the line
// without a parseable timestamp is reported as an undated signature.
std::optional<Signature> ParseSignature(
    std::string_view line, const LocaleProfile &locale,
    const BotRuleset &bots = BotRuleset::Default());

// Every signature of a line, left to right.
std::vector<Signature> FindSignatures(
    std::string_view line, const LocaleProfile &locale,
    const BotRuleset &bots = BotRuleset::Default());

// Replaces HTML comments and <nowiki> content with spaces. Newlines are
// kept, so offsets and line numbers stay valid.
std::string MaskWikitext(std::string_view wikitext);

// Byte spans of one post inside the page text.
struct PostLayout {
  size_t body_begin = 0;
  size_t body_end = 0;
  size_t signature_begin = 0;  // equal to signature_end for unsigned posts
  size_t signature_end = 0;
};

struct ThreadLayout {
  size_t heading_begin = 0;  // the full heading line
  size_t heading_end = 0;
  std::vector<PostLayout> posts;
};

// Threads of one page. layout is parallel to threads and empty for
// sources without wikitext offsets (TEI).
struct TalkPage {
  std::string title;
  std::vector<Thread> threads;
  std::vector<ThreadLayout> layout;
};

TalkPage ParseTalkWikitext(const RawPage &page, const LocaleProfile &locale,
                           const BotRuleset &bots = BotRuleset::Default());

}  // namespace selfreply

#endif  // SELFREPLY_WIKITEXT_H_
