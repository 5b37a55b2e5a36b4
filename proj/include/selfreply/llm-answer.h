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

#ifndef SELFREPLY_LLM_ANSWER_H_
#define SELFREPLY_LLM_ANSWER_H_

#include <optional>
#include <string>
#include <string_view>

#include "selfreply/categories.h"

namespace selfreply {

enum class AnswerKind { kLabel, kNull, kAmbiguous };

struct LlmAnswer {
  std::string raw;
  AnswerKind kind = AnswerKind::kAmbiguous;
  // Set iff kind == kLabel; always one of the typology labels 1-7.
  std::optional<CategoryLabel> label;
  // The free text around the answer, when the reply was not a bare token.
  std::optional<std::string> rationale_span;

  // "1".."7", "null" or "ambiguous".
  std::string ParsedName() const;

  bool operator==(const LlmAnswer &other) const = default;
};

// Normalizes a free-form model reply. Rules, in order:
//  1. the trimmed reply is a bare digit 1-7 (surrounding punctuation
//     allowed) -> that label;
//  2. the trimmed reply is "null" in any case -> Null;
//  3-5. otherwise the standalone digits 1-7 and the category names found
//     in the text are collected. A single distinct candidate, or a digit
//     and a name naming the same label, give that label. Several distinct
//     candidates give Ambiguous.
// With no candidate, a standalone word "null" gives Null and anything else
// is Ambiguous.
LlmAnswer ParseLlmAnswer(std::string_view raw);

// Inverse of ParsedName for manifests. Throws Error on unknown names.
LlmAnswer AnswerFromParsedName(std::string raw, std::string_view parsed);

}  // namespace selfreply

#endif  // SELFREPLY_LLM_ANSWER_H_
