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

#ifndef SELFREPLY_TEXT_UTIL_H_
#define SELFREPLY_TEXT_UTIL_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace selfreply {

// ASCII whitespace plus the UTF-8 no-break spaces used in French dates.
// Returns the byte length of the whitespace sequence at position i, or 0.
size_t SpaceLength(std::string_view s, size_t i);

std::string_view TrimView(std::string_view s);
std::string Trim(std::string_view s);

std::string ToLowerAscii(std::string_view s);
bool EqualsIgnoreCaseAscii(std::string_view a, std::string_view b);
bool EndsWithIgnoreCaseAscii(std::string_view s, std::string_view suffix);

inline bool IsDigit(char c) { return c >= '0' && c <= '9'; }
inline bool IsAsciiAlpha(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

// Uppercases the first code point for ASCII, Latin-1, Latin Extended-A,
// Greek and Cyrillic letters. Other scripts are returned unchanged.
std::string UppercaseFirst(std::string_view s);

// Byte length of the UTF-8 sequence starting with lead byte c (1 for
// invalid lead bytes so that scanning always advances).
size_t Utf8Length(unsigned char c);

// Removes every whitespace byte (and no-break space) from s.
std::string StripWhitespace(std::string_view s);

// Stable 64-bit FNV-1a hash, rendered as 16 hex digits.
std::string Fnv1aHex(std::string_view s);

std::vector<std::string> SplitLines(std::string_view s);

std::string ReadFile(const std::string &path);
void WriteFile(const std::string &path, std::string_view contents);

}  // namespace selfreply

#endif  // SELFREPLY_TEXT_UTIL_H_
