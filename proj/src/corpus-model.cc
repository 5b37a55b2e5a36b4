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

#include "selfreply/corpus-model.h"

#include <algorithm>
#include <arpa/inet.h>
#include <unordered_set>

#include "selfreply/errors.h"
#include "selfreply/text-util.h"

namespace selfreply {

const char *UserKindName(UserKind kind) {
  switch (kind) {
    case UserKind::kRegistered:
      return "registered";
    case UserKind::kIp:
      return "ip";
    case UserKind::kBot:
      return "bot";
  }
  return "registered";
}

UserKind ParseUserKind(std::string_view name) {
  if (name == "registered") return UserKind::kRegistered;
  if (name == "ip") return UserKind::kIp;
  if (name == "bot") return UserKind::kBot;
  throw Error("unknown user kind: " + std::string(name));
}

BotRuleset BotRuleset::Default() { return BotRuleset(); }

std::string BotRuleset::DefaultListPath() {
  return std::string(SELFREPLY_DATA_DIR) + "/bots.txt";
}

BotRuleset BotRuleset::LoadFile(const std::string &path) {
  BotRuleset rules;
  for (const std::string &line : SplitLines(ReadFile(path))) {
    std::string_view name = TrimView(line);
    if (name.empty() || name.front() == '#') continue;
    rules.AddName(name);
  }
  return rules;
}

void BotRuleset::AddName(std::string_view name) {
  std::string normalized = NormalizeUserName(name);
  if (!normalized.empty()) names_.insert(std::move(normalized));
}

bool BotRuleset::IsBot(std::string_view name) const {
  if (names_.count(std::string(name)) > 0) return true;
  return suffix_heuristic_ && EndsWithIgnoreCaseAscii(name, "bot");
}

std::string NormalizeUserName(std::string_view name) {
  std::string spaced;
  spaced.reserve(name.size());
  bool pending_space = false;
  for (char c : TrimView(name)) {
    if (c == '_' || c == ' ' || c == '\t') {
      pending_space = true;
      continue;
    }
    if (pending_space && !spaced.empty()) spaced.push_back(' ');
    pending_space = false;
    spaced.push_back(c);
  }
  return UppercaseFirst(spaced);
}

bool IsIpAddress(std::string_view text) {
  std::string s(text);
  unsigned char buffer[sizeof(struct in6_addr)];
  return inet_pton(AF_INET, s.c_str(), buffer) == 1 ||
         inet_pton(AF_INET6, s.c_str(), buffer) == 1;
}

UserId NormalizeAuthor(std::string_view raw, const BotRuleset &bots) {
  std::string trimmed = Trim(raw);
  if (trimmed.empty()) throw InvalidAuthorError("empty author name");

  unsigned char buffer[sizeof(struct in6_addr)];
  if (inet_pton(AF_INET, trimmed.c_str(), buffer) == 1) {
    return {UserKind::kIp, trimmed};
  }
  if (inet_pton(AF_INET6, trimmed.c_str(), buffer) == 1) {
    char text[INET6_ADDRSTRLEN];
    inet_ntop(AF_INET6, buffer, text, sizeof(text));
    std::string canonical(text);
    for (char &c : canonical) {
      if (c >= 'a' && c <= 'f') c = c - 'a' + 'A';
    }
    return {UserKind::kIp, canonical};
  }

  std::string name = NormalizeUserName(trimmed);
  if (name.empty()) throw InvalidAuthorError("empty author name");
  UserKind kind = bots.IsBot(name) ? UserKind::kBot : UserKind::kRegistered;
  return {kind, name};
}

const char *LanguageTag(Language language) {
  switch (language) {
    case Language::kEn:
      return "en";
    case Language::kFr:
      return "fr";
    case Language::kDe:
      return "de";
  }
  return "en";
}

Language ParseLanguage(std::string_view tag) {
  if (tag == "en") return Language::kEn;
  if (tag == "fr") return Language::kFr;
  if (tag == "de") return Language::kDe;
  throw Error("unsupported language tag: " + std::string(tag));
}

std::string MakeThreadId(std::string_view page, std::string_view heading,
                         int occurrence) {
  std::string id;
  id.reserve(page.size() + heading.size() + 8);
  id.append(page);
  id.push_back('#');
  id.append(heading);
  id.push_back('#');
  id.append(std::to_string(occurrence));
  return id;
}

void RenumberPosts(Thread *thread) {
  for (size_t i = 0; i < thread->posts.size(); ++i) {
    thread->posts[i].position = static_cast<int>(i);
  }
}

void ValidateCorpus(const Corpus &corpus) {
  std::unordered_set<std::string> ids;
  for (const Thread &thread : corpus.threads) {
    if (!ids.insert(thread.id).second) throw DuplicateIdError(thread.id);
    if (thread.language != corpus.language) {
      throw Error("thread " + thread.id + " is not in corpus language " +
                  LanguageTag(corpus.language));
    }
    for (size_t i = 0; i < thread.posts.size(); ++i) {
      const Post &post = thread.posts[i];
      if (post.position != static_cast<int>(i)) {
        throw Error("thread " + thread.id + ": post positions not consecutive");
      }
      if (post.is_signed && !post.author) {
        throw Error("thread " + thread.id + ": signed post without author");
      }
      if (!post.is_signed && post.body.empty()) {
        throw Error("thread " + thread.id + ": unsigned post with empty body");
      }
    }
  }
}

}  // namespace selfreply
