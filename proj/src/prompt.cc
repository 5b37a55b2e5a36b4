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

#include "selfreply/prompt.h"

#include "selfreply/categories.h"
#include "selfreply/errors.h"
#include "selfreply/text-util.h"

namespace selfreply {

namespace {

// Instrument wording, fixed so runs stay comparable.
constexpr char kPreamble[] =
    "You are an expert linguist specialised in the study of online "
    "interactions. You will annotate online discussions from the Wikipedia "
    "talk pages where the same user replies to himself, and identify the "
    "main reason for this, using the following seven categories:";

constexpr char kInstruction[] =
    "Below are the first two messages of a discussion (indicated by <MSG1> "
    "and <MSG2>). You will answer with the chosen category number for the "
    "second message, and only this number, without details nor explanation. "
    "You can decide that there is not enough data for answering and give a "
    "\"NULL\" answer.";

constexpr char kUserLayout[] =
    "<MSG1>\n{MSG1}\n</MSG1>\n\n<MSG2>\n{MSG2}\n</MSG2>\n";

std::string DefaultSystem() {
  std::string text = kPreamble;
  text += "\n\n";
  for (CategoryLabel label : TypologyLabels()) {
    text += std::to_string(LabelNumber(label)) + ". " + CategoryName(label) +
            ": " + CategoryDescription(label) + "\n";
  }
  text += "\n";
  text += kInstruction;
  return text;
}

// Message text as shown to the model: talk page indentation (leading ':'
// runs) removed from each line, markers escaped.
std::string PromptBody(std::string_view body) {
  std::string out;
  for (const std::string &line : SplitLines(Trim(body))) {
    std::string_view view = line;
    size_t colons = view.find_first_not_of(':');
    if (colons != std::string_view::npos && colons > 0) {
      view = TrimView(view.substr(colons));
    } else if (colons == std::string_view::npos) {
      view = {};
    }
    if (!out.empty()) out += '\n';
    out += view;
  }
  return EscapeMarkers(out);
}

void ReplaceOnce(std::string *text, std::string_view key,
                 std::string_view value) {
  size_t pos = text->find(key);
  if (pos != std::string::npos) text->replace(pos, key.size(), value);
}

}  // namespace

std::string Prompt::Text() const { return system + "\n\n" + user; }

const PromptTemplate &PromptTemplate::Default() {
  static const PromptTemplate kDefault(DefaultSystem(), kUserLayout);
  return kDefault;
}

PromptTemplate::PromptTemplate(std::string system, std::string user_layout)
    : system_(std::move(system)), user_layout_(std::move(user_layout)) {}

Prompt PromptTemplate::Build(const Thread &thread) const {
  if (thread.posts.size() < 2) {
    throw Error("thread " + thread.id + " has fewer than two posts");
  }
  Prompt prompt;
  prompt.system = system_;
  // Placeholders are substituted from the end so that the first body
  // cannot inject a second placeholder.
  prompt.user = user_layout_;
  ReplaceOnce(&prompt.user, "{MSG2}", PromptBody(thread.posts[1].body));
  ReplaceOnce(&prompt.user, "{MSG1}", PromptBody(thread.posts[0].body));
  return prompt;
}

std::string PromptTemplate::Hash() const {
  return Fnv1aHex(system_ + '\0' + user_layout_);
}

std::string EscapeMarkers(std::string_view body) {
  std::string out;
  out.reserve(body.size());
  for (size_t i = 0; i < body.size(); ++i) {
    if (body[i] == '<') {
      std::string_view rest = body.substr(i + 1);
      if (!rest.empty() && rest.front() == '/') rest.remove_prefix(1);
      if (rest.size() >= 3 && EqualsIgnoreCaseAscii(rest.substr(0, 3), "msg")) {
        out += "&lt;";
        continue;
      }
    }
    out.push_back(body[i]);
  }
  return out;
}

std::string BuildPrompt(const Thread &thread) {
  return PromptTemplate::Default().Build(thread).Text();
}

}  // namespace selfreply
