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

#ifndef SELFREPLY_TOKENIZER_H_
#define SELFREPLY_TOKENIZER_H_

#include <string>
#include <string_view>
#include <vector>

namespace selfreply {

// Splits UTF-8 text into case-preserving tokens.
//
//  - Words are runs of letters and digits. Hyphens between word
//    characters stay inside the word ("self-reply").
//  - A period joins two word parts when the part before it has at most two
//    letters ("p.s", "e.g", "U.S.A") or both sides are digits ("3.5"). A
//    final period is a token of its own.
//  - English clitics are split off: "I've" -> "I" "'ve", "don't" ->
//    "do" "n't". French elided articles and pronouns keep their
//    apostrophe: "l'article" -> "l'" "article". Typographic apostrophes
//    are read as ASCII ones.
//  - Every other non-space character is a single-character token.
std::vector<std::string> Tokenize(std::string_view text);

}  // namespace selfreply

#endif  // SELFREPLY_TOKENIZER_H_
