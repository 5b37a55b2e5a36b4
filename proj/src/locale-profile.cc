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

#include "selfreply/locale-profile.h"

#include <algorithm>
#include <cstdio>

#include "json.hpp"
#include "selfreply/errors.h"
#include "selfreply/text-util.h"

namespace selfreply {

using json = nlohmann::json;

namespace {

std::vector<LocaleProfile::Token> CompileLayout(std::string_view layout) {
  using Token = LocaleProfile::Token;
  std::vector<Token> tokens;
  auto literal = [&tokens](char c) {
    if (tokens.empty() || tokens.back().kind != Token::kLiteral) {
      tokens.push_back({Token::kLiteral, ""});
    }
    tokens.back().text.push_back(c);
  };
  size_t i = 0;
  while (i < layout.size()) {
    std::string_view rest = layout.substr(i);
    if (rest.starts_with("MONTH")) {
      tokens.push_back({Token::kMonth, ""});
      i += 5;
    } else if (rest.starts_with("YYYY")) {
      tokens.push_back({Token::kYear, ""});
      i += 4;
    } else if (rest.starts_with("HH")) {
      tokens.push_back({Token::kHour, ""});
      i += 2;
    } else if (rest.starts_with("MM")) {
      tokens.push_back({Token::kMinute, ""});
      i += 2;
    } else if (rest.starts_with("TZ")) {
      tokens.push_back({Token::kZone, ""});
      i += 2;
    } else if (rest[0] == 'D') {
      tokens.push_back({Token::kDay, ""});
      i += 1;
    } else if (size_t n = SpaceLength(layout, i); n > 0) {
      if (tokens.empty() || tokens.back().kind != Token::kSpace) {
        tokens.push_back({Token::kSpace, ""});
      }
      i += n;
    } else {
      literal(layout[i]);
      i += 1;
    }
  }
  int fields = 0;
  for (const Token &token : tokens) {
    if (token.kind != Token::kLiteral && token.kind != Token::kSpace) fields++;
  }
  if (fields != 6) {
    throw Error("timestamp layout needs HH, MM, D, MONTH, YYYY and TZ: " +
                std::string(layout));
  }
  return tokens;
}

std::vector<std::string> StringList(const json &root, const char *key) {
  std::vector<std::string> result;
  if (!root.contains(key)) return result;
  for (const json &item : root.at(key)) {
    result.push_back(item.get<std::string>());
  }
  return result;
}

// Reads up to max_digits digits (at least min_digits).
bool ReadNumber(std::string_view s, size_t *pos, int min_digits, int max_digits,
                int *value) {
  int v = 0;
  int n = 0;
  size_t i = *pos;
  while (i < s.size() && n < max_digits && IsDigit(s[i])) {
    v = v * 10 + (s[i] - '0');
    ++i;
    ++n;
  }
  if (n < min_digits) return false;
  // A longer digit run is a different number.
  if (i < s.size() && IsDigit(s[i])) return false;
  *pos = i;
  *value = v;
  return true;
}

bool IsLetterByte(char c) {
  return IsAsciiAlpha(c) || static_cast<unsigned char>(c) >= 0x80;
}

}  // namespace

LocaleProfile LocaleProfile::FromJson(std::string_view json_text) {
  LocaleProfile profile;
  json root;
  try {
    root = json::parse(json_text);
    profile.language_ = ParseLanguage(root.at("language").get<std::string>());

    const json &months = root.at("months");
    if (!months.is_array() || months.size() != 12) {
      throw Error("locale profile needs exactly 12 month entries");
    }
    for (size_t m = 0; m < 12; ++m) {
      if (!months[m].is_array() || months[m].empty()) {
        throw Error("month " + std::to_string(m + 1) + " has no names");
      }
      for (const json &name : months[m]) {
        profile.months_.emplace_back(name.get<std::string>(),
                                     static_cast<int>(m + 1));
      }
      profile.month_display_.push_back(months[m][0].get<std::string>());
    }
    std::stable_sort(profile.months_.begin(), profile.months_.end(),
                     [](const auto &a, const auto &b) {
                       return a.first.size() > b.first.size();
                     });

    for (const auto &[label, offset] : root.at("time_zones").items()) {
      if (!offset.is_number_integer()) {
        throw Error("time zone " + label + " has no integer offset");
      }
      profile.zones_[label] = offset.get<int>();
    }
    for (const std::string &layout : StringList(root, "timestamp_layouts")) {
      profile.layouts_.push_back(CompileLayout(layout));
    }
    if (profile.layouts_.empty()) throw Error("no timestamp layouts");
    profile.user_namespaces_ = StringList(root, "user_namespaces");
    profile.contribution_pages_ = StringList(root, "contribution_pages");
    profile.unsigned_templates_ = StringList(root, "unsigned_templates");
    profile.signature_prefixes_ = StringList(root, "signature_prefixes");
  } catch (const json::exception &e) {
    throw Error(std::string("invalid locale profile: ") + e.what());
  }
  return profile;
}

LocaleProfile LocaleProfile::Load(const std::string &dir, Language language) {
  std::string path = dir + "/" + LanguageTag(language) + ".json";
  LocaleProfile profile = FromJson(ReadFile(path));
  if (profile.language() != language) {
    throw Error(path + " declares another language");
  }
  return profile;
}

std::string LocaleProfile::DefaultDirectory() {
  return std::string(SELFREPLY_DATA_DIR) + "/locales";
}

std::optional<int> LocaleProfile::MonthNumber(std::string_view name) const {
  for (const auto &[month, number] : months_) {
    if (EqualsIgnoreCaseAscii(month, name)) return number;
  }
  return std::nullopt;
}

const std::string &LocaleProfile::MonthName(int month) const {
  return month_display_.at(month - 1);
}

std::optional<int> LocaleProfile::ZoneOffset(std::string_view label) const {
  auto it = zones_.find(std::string(label));
  if (it == zones_.end()) return std::nullopt;
  return it->second;
}

namespace {

std::optional<TimestampMatch> MatchLayout(
    std::string_view text, size_t pos,
    const std::vector<LocaleProfile::Token> &tokens,
    const LocaleProfile &locale) {
  using Token = LocaleProfile::Token;
  int hour = -1, minute = -1, day = -1, month = -1, year = -1, offset = 0;
  size_t i = pos;
  for (const Token &token : tokens) {
    switch (token.kind) {
      case Token::kLiteral: {
        if (i + token.text.size() > text.size()) return std::nullopt;
        if (!EqualsIgnoreCaseAscii(text.substr(i, token.text.size()),
                                   token.text)) {
          return std::nullopt;
        }
        i += token.text.size();
        break;
      }
      case Token::kSpace: {
        size_t n = SpaceLength(text, i);
        if (n == 0 || text[i] == '\n') return std::nullopt;
        while (n > 0 && text[i] != '\n') {
          i += n;
          n = SpaceLength(text, i);
        }
        break;
      }
      case Token::kHour:
        if (!ReadNumber(text, &i, 1, 2, &hour)) return std::nullopt;
        break;
      case Token::kMinute:
        if (!ReadNumber(text, &i, 2, 2, &minute)) return std::nullopt;
        break;
      case Token::kDay:
        if (!ReadNumber(text, &i, 1, 2, &day)) return std::nullopt;
        break;
      case Token::kYear:
        if (!ReadNumber(text, &i, 4, 4, &year)) return std::nullopt;
        break;
      case Token::kMonth: {
        size_t end = i;
        while (end < text.size() &&
               (IsLetterByte(text[end]) || text[end] == '.')) {
          end++;
        }
        // Longest month name that is a prefix of the word.
        std::string_view word = text.substr(i, end - i);
        bool found = false;
        for (size_t len = word.size(); len > 0 && !found; --len) {
          std::string_view candidate = word.substr(0, len);
          // Do not split inside a letter run.
          if (len < word.size() && IsLetterByte(word[len])) continue;
          if (auto m = locale.MonthNumber(candidate)) {
            month = *m;
            i += len;
            found = true;
          }
        }
        if (!found) return std::nullopt;
        break;
      }
      case Token::kZone: {
        size_t end = i;
        while (end < text.size() && end - i < 6 && IsAsciiAlpha(text[end])) {
          end++;
        }
        auto zone = locale.ZoneOffset(text.substr(i, end - i));
        if (!zone) return std::nullopt;
        offset = *zone;
        i = end;
        break;
      }
    }
  }
  auto when = Timestamp::FromCivil(year, month, day, hour, minute, offset);
  if (!when) return std::nullopt;
  return TimestampMatch{pos, i, *when};
}

}  // namespace

std::optional<TimestampMatch> MatchTimestampAt(std::string_view text,
                                               size_t pos,
                                               const LocaleProfile &locale) {
  if (pos >= text.size() || !IsDigit(text[pos])) return std::nullopt;
  if (pos > 0 && IsDigit(text[pos - 1])) return std::nullopt;
  for (const auto &layout : locale.layouts()) {
    if (auto match = MatchLayout(text, pos, layout, locale)) return match;
  }
  return std::nullopt;
}

std::vector<TimestampMatch> FindTimestamps(std::string_view text,
                                           const LocaleProfile &locale) {
  std::vector<TimestampMatch> matches;
  size_t pos = 0;
  while (pos < text.size()) {
    if (IsDigit(text[pos])) {
      if (auto match = MatchTimestampAt(text, pos, locale)) {
        matches.push_back(*match);
        pos = match->end;
        continue;
      }
    }
    pos++;
  }
  return matches;
}

Timestamp ParseTimestamp(std::string_view text, const LocaleProfile &locale) {
  std::string_view trimmed = TrimView(text);
  auto match = MatchTimestampAt(trimmed, 0, locale);
  if (!match || match->end != trimmed.size()) {
    throw TimestampFormatError(std::string(text));
  }
  return match->when;
}

std::string FormatTimestamp(const Timestamp &when,
                            const LocaleProfile &locale) {
  using Token = LocaleProfile::Token;
  if (!locale.ZoneOffset("UTC")) {
    throw Error("locale profile has no UTC zone label");
  }
  std::string result;
  char buffer[8];
  for (const Token &token : locale.layouts().front()) {
    switch (token.kind) {
      case Token::kLiteral:
        result += token.text;
        break;
      case Token::kSpace:
        result += ' ';
        break;
      case Token::kHour:
        std::snprintf(buffer, sizeof(buffer), "%02d", when.hour());
        result += buffer;
        break;
      case Token::kMinute:
        std::snprintf(buffer, sizeof(buffer), "%02d", when.minute());
        result += buffer;
        break;
      case Token::kDay:
        result += std::to_string(when.day());
        break;
      case Token::kMonth:
        result += locale.MonthName(when.month());
        break;
      case Token::kYear:
        std::snprintf(buffer, sizeof(buffer), "%04d", when.year());
        result += buffer;
        break;
      case Token::kZone:
        result += "UTC";
        break;
    }
  }
  return result;
}

}  // namespace selfreply
