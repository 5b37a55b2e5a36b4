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

// Core domain types: authors, posts, threads and corpora.

#ifndef SELFREPLY_CORPUS_MODEL_H_
#define SELFREPLY_CORPUS_MODEL_H_

#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "selfreply/timestamp.h"

namespace selfreply {

enum class UserKind { kRegistered, kIp, kBot };

const char *UserKindName(UserKind kind);
// Throws Error on unknown names.
UserKind ParseUserKind(std::string_view name);

// Identity of a post author as read from its signature. Unregistered users
// are identified by their IP address.
struct UserId {
  UserKind kind = UserKind::kRegistered;
  std::string value;

  bool operator==(const UserId &other) const = default;
};

// Decides which registered names belong to bots: an explicit name list plus
// the naming-convention heuristic (name ends with "bot", any case).
class BotRuleset {
 public:
  BotRuleset() = default;

  // Heuristic only.
  static BotRuleset Default();

  // The bot list shipped in the data directory.
  static std::string DefaultListPath();

  // Reads one name per line; blank lines and lines starting with '#' are
  // skipped. The heuristic stays enabled.
  static BotRuleset LoadFile(const std::string &path);

  void AddName(std::string_view name);
  void set_suffix_heuristic(bool enabled) { suffix_heuristic_ = enabled; }
  bool suffix_heuristic() const { return suffix_heuristic_; }

  // name must already be normalized.
  bool IsBot(std::string_view name) const;

 private:
  std::unordered_set<std::string> names_;
  bool suffix_heuristic_ = true;
};

// Applies MediaWiki user-name normalization: surrounding whitespace trimmed,
// underscores read as spaces, runs of spaces collapsed, first letter
// uppercased.
std::string NormalizeUserName(std::string_view name);

// Classifies and normalizes a raw signature name. IP addresses become kIp
// (IPv6 in canonical uppercase form), names matching the bot ruleset kBot,
// everything else kRegistered. Throws InvalidAuthorError on blank input.
UserId NormalizeAuthor(std::string_view raw,
                       const BotRuleset &bots = BotRuleset::Default());

// Same kind and same normalized value. Never matches across kinds.
inline bool SameAuthor(const UserId &a, const UserId &b) {
  return a.kind == b.kind && a.value == b.value;
}

// True if text is a textual IPv4 or IPv6 address.
bool IsIpAddress(std::string_view text);

enum class Language { kEn, kFr, kDe };

const char *LanguageTag(Language language);
// Throws Error on tags other than en, fr, de.
Language ParseLanguage(std::string_view tag);

// One message of a thread. Unsigned posts have no author.
struct Post {
  std::optional<UserId> author;
  std::optional<Timestamp> when;
  std::string body;
  int position = 0;
  bool is_signed = false;

  bool operator==(const Post &other) const = default;
};

// Posts under one level-2 heading, in document order.
struct Thread {
  std::string id;
  std::string heading;
  std::vector<Post> posts;
  std::string page;
  Language language = Language::kEn;

  bool operator==(const Thread &other) const = default;
};

// "<page>#<heading>#<n>", n counting occurrences of the heading on the page
// from 1.
std::string MakeThreadId(std::string_view page, std::string_view heading,
                         int occurrence);

// Reassigns positions 0..n-1 in current order.
void RenumberPosts(Thread *thread);

struct Corpus {
  std::vector<Thread> threads;
  Language language = Language::kEn;
  std::string provenance;

  // Provenance is descriptive and not part of the interchange format, so
  // it does not participate in equality.
  bool operator==(const Corpus &other) const {
    return language == other.language && threads == other.threads;
  }
};

// Checks the structural invariants: positions consecutive from 0, signed
// posts carry an author, unsigned posts have a non-empty body, ids unique,
// every thread in the corpus language. Throws Error or DuplicateIdError.
void ValidateCorpus(const Corpus &corpus);

}  // namespace selfreply

#endif  // SELFREPLY_CORPUS_MODEL_H_
