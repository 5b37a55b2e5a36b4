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

#include "selfreply/corpus-io.h"

#include <fstream>
#include <unordered_set>

#include "selfreply/errors.h"
#include "selfreply/text-util.h"

namespace selfreply {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

ordered_json ThreadToJson(const Thread &thread) {
  ordered_json posts = ordered_json::array();
  for (const Post &post : thread.posts) {
    ordered_json p;
    if (post.author) {
      p["author"] = {{"kind", UserKindName(post.author->kind)},
                     {"value", post.author->value}};
    } else {
      p["author"] = nullptr;
    }
    p["when"] = post.when ? ordered_json(post.when->ToIso()) : ordered_json();
    p["body"] = post.body;
    p["signed"] = post.is_signed;
    posts.push_back(std::move(p));
  }
  ordered_json t;
  t["id"] = thread.id;
  t["page"] = thread.page;
  t["language"] = LanguageTag(thread.language);
  t["heading"] = thread.heading;
  t["posts"] = std::move(posts);
  return t;
}

Thread ThreadFromJson(const json &value) {
  try {
    Thread thread;
    thread.id = value.at("id").get<std::string>();
    thread.page = value.at("page").get<std::string>();
    thread.language = ParseLanguage(value.at("language").get<std::string>());
    thread.heading = value.at("heading").get<std::string>();
    for (const json &p : value.at("posts")) {
      Post post;
      const json &author = p.at("author");
      if (!author.is_null()) {
        post.author =
            UserId{ParseUserKind(author.at("kind").get<std::string>()),
                   author.at("value").get<std::string>()};
        if (post.author->value.empty()) throw Error("empty author value");
      }
      const json &when = p.at("when");
      if (!when.is_null())
        post.when = Timestamp::ParseIso(when.get<std::string>());
      post.body = p.at("body").get<std::string>();
      post.is_signed = p.at("signed").get<bool>();
      if (post.is_signed && !post.author) {
        throw Error("signed post without author");
      }
      thread.posts.push_back(std::move(post));
    }
    if (thread.id.empty()) throw Error("empty thread id");
    RenumberPosts(&thread);
    return thread;
  } catch (const json::exception &e) {
    throw Error(e.what());
  }
}

std::string ThreadToJsonLine(const Thread &thread) {
  return ThreadToJson(thread).dump(-1, ' ', false,
                                   json::error_handler_t::replace);
}

void WriteCorpus(const Corpus &corpus, std::ostream &out) {
  std::unordered_set<std::string> ids;
  for (const Thread &thread : corpus.threads) {
    if (!ids.insert(thread.id).second) throw DuplicateIdError(thread.id);
    out << ThreadToJsonLine(thread) << '\n';
  }
}

void WriteCorpus(const Corpus &corpus, const std::string &path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path);
  WriteCorpus(corpus, out);
  if (!out) throw Error("write failed: " + path);
}

Corpus ReadCorpus(std::istream &in, const std::string &name,
                  Language default_language) {
  Corpus corpus;
  corpus.language = default_language;
  corpus.provenance = name;
  std::unordered_set<std::string> ids;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    number++;
    if (TrimView(line).empty()) continue;
    Thread thread;
    try {
      thread = ThreadFromJson(json::parse(line));
    } catch (const json::exception &e) {
      throw FormatError(name, number, e.what());
    } catch (const TimestampFormatError &e) {
      throw FormatError(name, number, e.what());
    } catch (const Error &e) {
      throw FormatError(name, number, e.what());
    }
    if (!ids.insert(thread.id).second) throw DuplicateIdError(thread.id);
    if (corpus.threads.empty()) {
      corpus.language = thread.language;
    } else if (thread.language != corpus.language) {
      throw FormatError(name, number, "thread language differs from corpus");
    }
    corpus.threads.push_back(std::move(thread));
  }
  return corpus;
}

Corpus ReadCorpus(const std::string &path, Language default_language) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  return ReadCorpus(in, path, default_language);
}

}  // namespace selfreply
