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

// Per-language signature conventions: month names, timestamp layouts,
// user namespace aliases and time zone labels. Profiles are data files
// (data/locales/<lang>.json) so that date formats can be adjusted without
// rebuilding.
//
// Timestamp layouts are written with these placeholders:
//
//   HH     hour, 1 or 2 digits
//   MM     minute, 2 digits
//   D      day of month, 1 or 2 digits
//   MONTH  any month name of the profile (case-insensitive)
//   YYYY   year, 4 digits
//   TZ     a time zone label of the profile
//
// Everything else is literal text; a space matches any run of whitespace
// including no-break spaces.

#ifndef SELFREPLY_LOCALE_PROFILE_H_
#define SELFREPLY_LOCALE_PROFILE_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "selfreply/corpus-model.h"
#include "selfreply/timestamp.h"

namespace selfreply {

class LocaleProfile {
 public:
  // Pattern element after compilation.
  struct Token {
    enum Kind { kLiteral, kSpace, kHour, kMinute, kDay, kMonth, kYear, kZone };
    Kind kind;
    std::string text;
  };

  // Parses a profile from its JSON text. Throws Error on invalid profiles
  // (month numbers outside 1..12, zones without offsets, bad layouts).
  static LocaleProfile FromJson(std::string_view json_text);

  // Loads <dir>/<tag>.json.
  static LocaleProfile Load(const std::string &dir, Language language);

  // Directory of the profiles shipped with the toolkit.
  static std::string DefaultDirectory();

  Language language() const { return language_; }

  // Month number (1..12) for a month name, case-insensitive.
  std::optional<int> MonthNumber(std::string_view name) const;
  const std::string &MonthName(int month) const;

  // UTC offset in minutes for a zone label.
  std::optional<int> ZoneOffset(std::string_view label) const;

  // User and user talk namespace names, e.g. "User", "Utilisateur".
  const std::vector<std::string> &user_namespaces() const {
    return user_namespaces_;
  }
  // Page prefixes whose subpage is a user name, e.g.
  // "Special:Contributions".
  const std::vector<std::string> &contribution_pages() const {
    return contribution_pages_;
  }
  // Templates standing in for a missing signature: {{name|user|date}}.
  const std::vector<std::string> &unsigned_templates() const {
    return unsigned_templates_;
  }
  // Boilerplate text that precedes substituted signatures, e.g.
  // "Preceding unsigned comment added by".
  const std::vector<std::string> &signature_prefixes() const {
    return signature_prefixes_;
  }

  const std::vector<std::vector<Token>> &layouts() const { return layouts_; }

 private:
  Language language_ = Language::kEn;
  std::vector<std::pair<std::string, int>> months_;  // longest name first
  std::vector<std::string> month_display_;           // index 0 = January
  std::map<std::string, int> zones_;
  std::vector<std::string> user_namespaces_;
  std::vector<std::string> contribution_pages_;
  std::vector<std::string> unsigned_templates_;
  std::vector<std::string> signature_prefixes_;
  std::vector<std::vector<Token>> layouts_;
};

// A timestamp found inside a longer text.
struct TimestampMatch {
  size_t begin = 0;
  size_t end = 0;
  Timestamp when;
};

// Tries every layout at exactly position pos. On success returns the
// match; unknown zone labels and invalid dates do not match.
std::optional<TimestampMatch> MatchTimestampAt(std::string_view text,
                                               size_t pos,
                                               const LocaleProfile &locale);

// All non-overlapping timestamps in text, left to right.
std::vector<TimestampMatch> FindTimestamps(std::string_view text,
                                           const LocaleProfile &locale);

// Parses a complete timestamp (surrounding whitespace allowed) and
// converts it to UTC. Throws TimestampFormatError.
Timestamp ParseTimestamp(std::string_view text, const LocaleProfile &locale);

// Renders a timestamp with the first layout of the profile in UTC, the
// inverse of ParseTimestamp.
std::string FormatTimestamp(const Timestamp &when, const LocaleProfile &locale);

}  // namespace selfreply

#endif  // SELFREPLY_LOCALE_PROFILE_H_
