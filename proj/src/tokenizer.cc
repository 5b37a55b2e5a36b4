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

#include "selfreply/tokenizer.h"

#include <algorithm>
#include <array>

#include "selfreply/text-util.h"

namespace selfreply {

namespace {

enum class Kind { kSpace, kWord, kApostrophe, kPeriod, kHyphen, kOther };

struct Char {
  Kind kind;
  char32_t code;
  size_t begin;
  size_t end;
};

char32_t Decode(std::string_view s, size_t i, size_t *length) {
  unsigned char c = s[i];
  size_t n = Utf8Length(c);
  if (n == 0 || i + n > s.size()) {
    *length = 1;
    return c;
  }
  *length = n;
  if (n == 1) return c;
  char32_t code = c & (0xFF >> (n + 1));
  for (size_t k = 1; k < n; ++k) code = (code << 6) | (s[i + k] & 0x3F);
  return code;
}

Kind Classify(char32_t c) {
  if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
      c == '\v' || c == 0xA0 || c == 0x202F || c == 0x2009 || c == 0x200B) {
    return Kind::kSpace;
  }
  if (c == '\'' || c == 0x2019) return Kind::kApostrophe;
  if (c == '.') return Kind::kPeriod;
  if (c == '-') return Kind::kHyphen;
  if (c < 0x80) {
    return IsDigit(static_cast<char>(c)) || IsAsciiAlpha(static_cast<char>(c))
               ? Kind::kWord
               : Kind::kOther;
  }
  // Non-ASCII punctuation commonly found in talk pages.
  static constexpr std::array<char32_t, 16> kPunctuation = {
      0xAB,   0xBB,   0xA1,   0xBF,   0xB7,   0x2018, 0x201C, 0x201D,
      0x2013, 0x2014, 0x2026, 0x2022, 0x2039, 0x203A, 0x201E, 0x2192};
  if (std::find(kPunctuation.begin(), kPunctuation.end(), c) !=
      kPunctuation.end()) {
    return Kind::kOther;
  }
  return Kind::kWord;
}

bool IsDigitCode(char32_t c) { return c >= '0' && c <= '9'; }

bool IsEnglishClitic(std::string_view lower) {
  return lower == "ve" || lower == "s" || lower == "re" || lower == "ll" ||
         lower == "d" || lower == "m";
}

bool IsFrenchElision(std::string_view lower) {
  static constexpr std::array<std::string_view, 13> kElisions = {
      "l", "d",  "j",     "m",      "n",      "s",     "t",
      "c", "qu", "jusqu", "lorsqu", "puisqu", "quoiqu"};
  return std::find(kElisions.begin(), kElisions.end(), lower) !=
         kElisions.end();
}

class Tokenizer {
 public:
  explicit Tokenizer(std::string_view text) : text_(text) {
    for (size_t i = 0; i < text.size();) {
      size_t length;
      char32_t code = Decode(text, i, &length);
      chars_.push_back({Classify(code), code, i, i + length});
      i += length;
    }
  }

  std::vector<std::string> Run() {
    size_t i = 0;
    while (i < chars_.size()) {
      switch (chars_[i].kind) {
        case Kind::kSpace:
          i++;
          break;
        case Kind::kWord:
          i = Word(i);
          break;
        default:
          tokens_.emplace_back(Text(i, i + 1));
          i++;
      }
    }
    return std::move(tokens_);
  }

 private:
  std::string Text(size_t from, size_t to) const {
    return std::string(text_.substr(chars_[from].begin,
                                    chars_[to - 1].end - chars_[from].begin));
  }

  bool IsWord(size_t i) const {
    return i < chars_.size() && chars_[i].kind == Kind::kWord;
  }

  // End of the run of word characters starting at i.
  size_t RunEnd(size_t i) const {
    while (IsWord(i)) i++;
    return i;
  }

  // Reads one word starting at i and returns the index after it.
  size_t Word(size_t i) {
    std::string word;
    size_t segment = i;  // Start of the current period-separated part.
    size_t j = RunEnd(i);
    word = Text(i, j);
    while (j + 1 < chars_.size() && IsWord(j + 1)) {
      Kind joiner = chars_[j].kind;
      if (joiner == Kind::kHyphen) {
        size_t end = RunEnd(j + 1);
        word += Text(j, end);
        j = end;
      } else if (joiner == Kind::kPeriod && JoinsAtPeriod(segment, j)) {
        size_t end = RunEnd(j + 1);
        word += Text(j, end);
        segment = j + 1;
        j = end;
      } else if (joiner == Kind::kApostrophe) {
        size_t end = RunEnd(j + 1);
        std::string right = Text(j + 1, end);
        std::string lower_right = ToLowerAscii(right);
        std::string lower_word = ToLowerAscii(word);
        if (lower_right == "t" && word.size() > 1 && lower_word.back() == 'n') {
          tokens_.push_back(word.substr(0, word.size() - 1));
          tokens_.push_back(word.substr(word.size() - 1) + "'" + right);
          return end;
        }
        if (IsEnglishClitic(lower_right)) {
          tokens_.push_back(word);
          tokens_.push_back("'" + right);
          return end;
        }
        if (IsFrenchElision(lower_word)) {
          tokens_.push_back(word + "'");
          return j + 1;
        }
        word += "'" + right;
        segment = j + 1;
        j = end;
      } else {
        break;
      }
    }
    tokens_.push_back(std::move(word));
    return j;
  }

  // A period at index `dot` joins the parts around it.
  bool JoinsAtPeriod(size_t segment, size_t dot) const {
    bool digits_before = true;
    for (size_t k = segment; k < dot; ++k) {
      if (!IsDigitCode(chars_[k].code)) digits_before = false;
    }
    if (digits_before && IsDigitCode(chars_[dot + 1].code)) return true;
    return !digits_before && dot - segment <= 2;
  }

  std::string_view text_;
  std::vector<Char> chars_;
  std::vector<std::string> tokens_;
};

}  // namespace

std::vector<std::string> Tokenize(std::string_view text) {
  return Tokenizer(text).Run();
}

}  // namespace selfreply
