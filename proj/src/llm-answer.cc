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

#include "selfreply/llm-answer.h"

#include <set>
#include <vector>

#include "selfreply/errors.h"
#include "selfreply/text-util.h"

namespace selfreply {

namespace {

struct NameVariant {
  int label;
  const char *words;  // Lowercase, single-space separated.
};

constexpr NameVariant kVariants[] = {
    {1, "addendum"},
    {1, "addenda"},
    {2, "self correction"},
    {2, "selfcorrection"},
    {2, "self corrections"},
    {3, "self answer"},
    {3, "selfanswer"},
    {3, "self answering"},
    {4, "chasing up"},
    {4, "chasingup"},
    {4, "chase up"},
    {5, "action report"},
    {5, "actionreport"},
    {5, "action reports"},
    {6, "reaction to event"},
    {6, "reaction to events"},
    {6, "reaction to an event"},
    {6, "reactiontoevent"},
    {7, "list"},
};

bool IsAlnum(char c) {
  return IsDigit(c) || IsAsciiAlpha(c) || static_cast<unsigned char>(c) >= 0x80;
}

// Lowercase words separated by single spaces, with a space at both ends.
std::string WordForm(std::string_view text) {
  std::string out = " ";
  for (char c : text) {
    if (IsAlnum(c)) {
      out.push_back(c >= 'A' && c <= 'Z' ? c - 'A' + 'a' : c);
    } else if (out.back() != ' ') {
      out.push_back(' ');
    }
  }
  if (out.back() != ' ') out.push_back(' ');
  return out;
}

std::string_view StripPunctuation(std::string_view text) {
  size_t begin = 0, end = text.size();
  while (begin < end && !IsAlnum(text[begin])) begin++;
  while (end > begin && !IsAlnum(text[end - 1])) end--;
  return text.substr(begin, end - begin);
}

std::set<int> StandaloneDigits(std::string_view text) {
  std::set<int> digits;
  for (size_t i = 0; i < text.size(); ++i) {
    if (text[i] < '1' || text[i] > '7') continue;
    bool left_free = i == 0 || (!IsAlnum(text[i - 1]) && text[i - 1] != '.' &&
                                text[i - 1] != ',');
    bool right_free = i + 1 == text.size() || !IsAlnum(text[i + 1]);
    // "3.5" or "3,5" are numbers, not answers.
    if (right_free && i + 2 < text.size() &&
        (text[i + 1] == '.' || text[i + 1] == ',') && IsDigit(text[i + 2])) {
      right_free = false;
    }
    if (left_free && right_free) digits.insert(text[i] - '0');
  }
  return digits;
}

std::set<int> NamedLabels(const std::string &words) {
  std::set<int> labels;
  for (const NameVariant &variant : kVariants) {
    std::string needle = std::string(" ") + variant.words + " ";
    if (words.find(needle) != std::string::npos) labels.insert(variant.label);
  }
  return labels;
}

LlmAnswer Labelled(std::string raw, int number, bool bare) {
  LlmAnswer answer;
  answer.kind = AnswerKind::kLabel;
  answer.label = static_cast<CategoryLabel>(number);
  if (!bare) answer.rationale_span = Trim(raw);
  answer.raw = std::move(raw);
  return answer;
}

}  // namespace

std::string LlmAnswer::ParsedName() const {
  switch (kind) {
    case AnswerKind::kLabel:
      return std::to_string(LabelNumber(*label));
    case AnswerKind::kNull:
      return "null";
    case AnswerKind::kAmbiguous:
      break;
  }
  return "ambiguous";
}

LlmAnswer ParseLlmAnswer(std::string_view raw) {
  std::string text(raw);
  std::string_view core = StripPunctuation(text);

  // Rules 1 and 2: the whole reply is the answer.
  if (core.size() == 1 && core[0] >= '1' && core[0] <= '7') {
    return Labelled(text, core[0] - '0', true);
  }
  if (EqualsIgnoreCaseAscii(core, "null")) {
    LlmAnswer answer;
    answer.raw = text;
    answer.kind = AnswerKind::kNull;
    return answer;
  }

  // Rules 3 to 5: candidates found in free text.
  std::set<int> digits = StandaloneDigits(text);
  std::string words = WordForm(text);
  std::set<int> names = NamedLabels(words);
  bool says_null = words.find(" null ") != std::string::npos;

  LlmAnswer ambiguous;
  ambiguous.raw = text;
  ambiguous.kind = AnswerKind::kAmbiguous;
  if (!TrimView(text).empty()) ambiguous.rationale_span = Trim(text);

  std::set<int> candidates = digits;
  candidates.insert(names.begin(), names.end());
  if (digits.size() > 1 || names.size() > 1 || candidates.size() > 1) {
    return ambiguous;
  }
  if (candidates.size() == 1) {
    if (says_null) return ambiguous;
    return Labelled(text, *candidates.begin(), false);
  }
  if (says_null) {
    LlmAnswer answer;
    answer.raw = text;
    answer.kind = AnswerKind::kNull;
    answer.rationale_span = Trim(text);
    return answer;
  }
  return ambiguous;
}

LlmAnswer AnswerFromParsedName(std::string raw, std::string_view parsed) {
  LlmAnswer answer;
  answer.raw = std::move(raw);
  if (parsed == "null") {
    answer.kind = AnswerKind::kNull;
  } else if (parsed == "ambiguous") {
    answer.kind = AnswerKind::kAmbiguous;
  } else if (parsed.size() == 1 && parsed[0] >= '1' && parsed[0] <= '7') {
    answer.kind = AnswerKind::kLabel;
    answer.label = static_cast<CategoryLabel>(parsed[0] - '0');
  } else {
    throw Error("unknown parsed answer: " + std::string(parsed));
  }
  return answer;
}

}  // namespace selfreply
