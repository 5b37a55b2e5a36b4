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

#include "selfreply/tei.h"

#include <map>

#include "selfreply/errors.h"
#include "selfreply/text-util.h"
#include "selfreply/xml.h"

namespace selfreply {

namespace {

const XmlNode *FindFirst(const XmlNode &node, std::string_view name) {
  if (!node.is_text() && node.LocalName() == name) return &node;
  for (const XmlNode &child : node.children) {
    if (const XmlNode *found = FindFirst(child, name)) return found;
  }
  return nullptr;
}

std::optional<Language> DeclaredLanguage(const XmlNode &node) {
  auto lang = node.Attribute("xml:lang");
  if (!lang) lang = node.Attribute("lang");
  if (!lang) return std::nullopt;
  std::string tag = ToLowerAscii(lang->substr(0, 2));
  try {
    return ParseLanguage(tag);
  } catch (const Error &) {
    return std::nullopt;
  }
}

// Text of a post with paragraph and line breaks as newlines.
void CollectText(const XmlNode &node, std::string *out) {
  if (node.is_text()) {
    out->append(node.text);
    return;
  }
  std::string_view name = node.LocalName();
  bool block = name == "p" || name == "lb" || name == "br";
  if (block && !out->empty() && out->back() != '\n') out->push_back('\n');
  for (const XmlNode &child : node.children) CollectText(child, out);
}

Post ReadPost(const XmlNode &element, const BotRuleset &bots) {
  Post post;
  if (auto who = element.Attribute("who")) {
    std::string_view name = TrimView(*who);
    if (!name.empty() && name.front() == '#') name.remove_prefix(1);
    try {
      post.author = NormalizeAuthor(name, bots);
      post.is_signed = true;
    } catch (const InvalidAuthorError &) {
    }
  }
  if (auto when = element.Attribute("when")) {
    try {
      post.when = Timestamp::ParseIso(*when);
    } catch (const TimestampFormatError &) {
    }
  }
  std::string text;
  for (const XmlNode &child : element.children) CollectText(child, &text);
  // Source indentation between elements is layout, not content.
  for (const std::string &line : SplitLines(text)) {
    std::string_view trimmed = TrimView(line);
    if (trimmed.empty()) continue;
    if (!post.body.empty()) post.body += '\n';
    post.body += trimmed;
  }
  return post;
}

struct TeiWalker {
  const TeiOptions &options;
  std::string page;
  Language language;
  std::map<std::string, int> occurrences;
  TalkPage result;

  void Walk(const XmlNode &node) {
    if (node.is_text()) return;
    if (node.LocalName() == "div") {
      bool has_posts = false;
      for (const XmlNode &child : node.children) {
        if (!child.is_text() && child.LocalName() == "post") has_posts = true;
      }
      if (has_posts || node.Attribute("type") == "thread") AddThread(node);
    }
    for (const XmlNode &child : node.children) {
      if (!child.is_text() && child.LocalName() != "post") Walk(child);
    }
  }

  void AddThread(const XmlNode &div) {
    Thread thread;
    thread.page = page;
    thread.language = language;
    for (const XmlNode &child : div.children) {
      if (child.is_text()) continue;
      if (child.LocalName() == "head" && thread.heading.empty()) {
        thread.heading = Trim(child.InnerText());
      } else if (child.LocalName() == "post") {
        Post post = ReadPost(child, options.bots);
        // Nothing to keep from an anonymous empty post.
        if (!post.is_signed && post.body.empty()) continue;
        thread.posts.push_back(std::move(post));
      }
    }
    thread.id =
        MakeThreadId(page, thread.heading, ++occurrences[thread.heading]);
    RenumberPosts(&thread);
    result.threads.push_back(std::move(thread));
  }
};

}  // namespace

TalkPage ParseTei(std::string_view xml, const TeiOptions &options) {
  XmlNode root = ParseXml(xml);

  TeiWalker walker{options, options.page, options.language, {}, {}};
  if (const XmlNode *header = FindFirst(root, "teiHeader")) {
    if (const XmlNode *title = FindFirst(*header, "title")) {
      std::string text = Trim(title->InnerText());
      if (!text.empty()) walker.page = text;
    }
  }
  if (auto lang = DeclaredLanguage(root)) {
    walker.language = *lang;
  } else if (const XmlNode *text = FindFirst(root, "text")) {
    if (auto text_lang = DeclaredLanguage(*text)) walker.language = *text_lang;
  }
  walker.result.title = walker.page;
  walker.Walk(root);
  return std::move(walker.result);
}

}  // namespace selfreply
