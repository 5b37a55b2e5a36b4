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

#include "selfreply/timestamp.h"

#include <cstdio>

#include "selfreply/errors.h"
#include "selfreply/text-util.h"

namespace selfreply {

namespace chr = std::chrono;

std::optional<Timestamp> Timestamp::FromCivil(int year, int month, int day,
                                              int hour, int minute,
                                              int offset_minutes) {
  if (month < 1 || month > 12 || day < 1 || day > 31) return std::nullopt;
  if (hour < 0 || hour > 23 || minute < 0 || minute > 59) return std::nullopt;
  chr::year_month_day date{chr::year{year},
                           chr::month{static_cast<unsigned>(month)},
                           chr::day{static_cast<unsigned>(day)}};
  if (!date.ok()) return std::nullopt;
  Minutes local = chr::sys_days{date} + chr::hours{hour} + chr::minutes{minute};
  return Timestamp(local - chr::minutes{offset_minutes});
}

namespace {

// Reads exactly n digits at *pos.
bool ReadDigits(std::string_view s, size_t *pos, int n, int *value) {
  if (*pos + n > s.size()) return false;
  int v = 0;
  for (int i = 0; i < n; ++i) {
    char c = s[*pos + i];
    if (!IsDigit(c)) return false;
    v = v * 10 + (c - '0');
  }
  *pos += n;
  *value = v;
  return true;
}

bool Expect(std::string_view s, size_t *pos, char c) {
  if (*pos >= s.size() || s[*pos] != c) return false;
  ++*pos;
  return true;
}

}  // namespace

Timestamp Timestamp::ParseIso(std::string_view text) {
  std::string_view s = TrimView(text);
  size_t pos = 0;
  int year, month, day, hour, minute, second = 0;
  bool ok = ReadDigits(s, &pos, 4, &year) && Expect(s, &pos, '-') &&
            ReadDigits(s, &pos, 2, &month) && Expect(s, &pos, '-') &&
            ReadDigits(s, &pos, 2, &day) &&
            (Expect(s, &pos, 'T') || Expect(s, &pos, ' ')) &&
            ReadDigits(s, &pos, 2, &hour) && Expect(s, &pos, ':') &&
            ReadDigits(s, &pos, 2, &minute);
  if (!ok) throw TimestampFormatError(std::string(text));
  if (pos < s.size() && s[pos] == ':') {
    ++pos;
    if (!ReadDigits(s, &pos, 2, &second) || second > 60) {
      throw TimestampFormatError(std::string(text));
    }
    // Fractional seconds.
    if (pos < s.size() && s[pos] == '.') {
      ++pos;
      while (pos < s.size() && IsDigit(s[pos])) ++pos;
    }
  }
  int offset = 0;
  if (pos < s.size()) {
    if (s[pos] == 'Z' || s[pos] == 'z') {
      ++pos;
    } else if (s[pos] == '+' || s[pos] == '-') {
      int sign = s[pos] == '+' ? 1 : -1;
      ++pos;
      int oh, om = 0;
      if (!ReadDigits(s, &pos, 2, &oh)) {
        throw TimestampFormatError(std::string(text));
      }
      if (pos < s.size()) {
        Expect(s, &pos, ':');
        if (!ReadDigits(s, &pos, 2, &om)) {
          throw TimestampFormatError(std::string(text));
        }
      }
      offset = sign * (oh * 60 + om);
    }
  }
  if (pos != s.size()) throw TimestampFormatError(std::string(text));
  auto result = FromCivil(year, month, day, hour, minute, offset);
  if (!result) throw TimestampFormatError(std::string(text));
  return *result;
}

std::string Timestamp::ToIso() const {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%04d-%02d-%02dT%02d:%02dZ", year(),
                month(), day(), hour(), minute());
  return buffer;
}

Timestamp Timestamp::Now() {
  return Timestamp(chr::floor<chr::minutes>(chr::system_clock::now()));
}

int Timestamp::year() const {
  chr::year_month_day ymd{chr::floor<chr::days>(instant_)};
  return static_cast<int>(ymd.year());
}

int Timestamp::month() const {
  chr::year_month_day ymd{chr::floor<chr::days>(instant_)};
  return static_cast<unsigned>(ymd.month());
}

int Timestamp::day() const {
  chr::year_month_day ymd{chr::floor<chr::days>(instant_)};
  return static_cast<unsigned>(ymd.day());
}

int Timestamp::hour() const {
  auto since_midnight = instant_ - chr::floor<chr::days>(instant_);
  return static_cast<int>(since_midnight.count() / 60);
}

int Timestamp::minute() const {
  auto since_midnight = instant_ - chr::floor<chr::days>(instant_);
  return static_cast<int>(since_midnight.count() % 60);
}

}  // namespace selfreply
