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

// Zero-shot classification prompt for the second message of a thread.

#ifndef SELFREPLY_PROMPT_H_
#define SELFREPLY_PROMPT_H_

#include <string>
#include <string_view>

#include "selfreply/corpus-model.h"

namespace selfreply {

struct Prompt {
  // Preamble, numbered categories and answer instructions. Identical for
  // every thread.
  std::string system;
  // The first two messages in <MSG1>/<MSG2> wrappers.
  std::string user;

  // system, a blank line, then user.
  std::string Text() const;
};

class PromptTemplate {
 public:
  // The standard instrument: preamble, the seven categories numbered 1-7
  // with their definitions, and the answer instructions.
  static const PromptTemplate &Default();

  PromptTemplate(std::string system, std::string user_layout);

  // Renders the first two posts with talk page indentation removed; later
  // posts are ignored. Throws Error when the thread has fewer than two posts.
  Prompt Build(const Thread &thread) const;

  const std::string &system() const { return system_; }

  // FNV-1a over the system text and the message layout.
  std::string Hash() const;

 private:
  std::string system_;
  // Contains "{MSG1}" and "{MSG2}" placeholders.
  std::string user_layout_;
};

// Neutralizes text that would read as a message marker by escaping the '<'
// of any opening or closing tag starting with "msg", in any case.
std::string EscapeMarkers(std::string_view body);

// Default().Build(thread).Text().
std::string BuildPrompt(const Thread &thread);

}  // namespace selfreply

#endif  // SELFREPLY_PROMPT_H_
