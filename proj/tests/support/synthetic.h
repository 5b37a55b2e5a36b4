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

// Generators for synthetic corpora and talk pages.

#ifndef SELFREPLY_TESTS_SUPPORT_SYNTHETIC_H_
#define SELFREPLY_TESTS_SUPPORT_SYNTHETIC_H_

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "selfreply/corpus-model.h"
#include "selfreply/locale-profile.h"
#include "selfreply/wikitext.h"

namespace selfreply::testing {

// Threads of 1 to 8 posts with random author patterns over a small
// alphabet. About one post in ten is unsigned; authors mix kinds,
// including a registered user and an IP sharing the same text.
Corpus RandomPatternCorpus(size_t threads, uint64_t seed);

struct ExpectedPost {
  std::optional<UserId> author;
  std::optional<Timestamp> when;
};

struct ExpectedThread {
  std::string heading;
  std::vector<ExpectedPost> posts;
};

// A talk page together with what a parser should recover from it.
struct GeneratedPage {
  RawPage page;
  std::vector<ExpectedThread> threads;
};

// Random talk page in the profile's language: a preamble, level-2
// sections, signed posts in several signature styles, undated and
// template signatures, indentation, lists, comments, nowiki, templates,
// subsection headings and a trailing unsigned post now and then.
GeneratedPage GenerateTalkPage(std::mt19937_64 &rng,
                               const LocaleProfile &locale,
                               const std::string &title);

// Empty when the layout spans reassemble the page text from its first
// heading on (whitespace ignored) and every post body equals its span;
// otherwise a description of the first violation.
std::string RoundTripViolation(const RawPage &page, const TalkPage &parsed);

// Empty when `parsed` recovers the generated threads, authors and
// timestamps; otherwise a description of the first difference.
std::string ExpectationViolation(const GeneratedPage &generated,
                                 const TalkPage &parsed);

// A MediaWiki XML export of talk pages (namespace 1).
std::string DumpXml(const std::vector<RawPage> &pages);

}  // namespace selfreply::testing

#endif  // SELFREPLY_TESTS_SUPPORT_SYNTHETIC_H_
