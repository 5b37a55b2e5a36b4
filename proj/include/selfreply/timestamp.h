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

#ifndef SELFREPLY_TIMESTAMP_H_
#define SELFREPLY_TIMESTAMP_H_

#include <chrono>
#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace selfreply {

// A UTC instant with minute precision.
class Timestamp {
 public:
  using Minutes = std::chrono::sys_time<std::chrono::minutes>;

  Timestamp() = default;
  explicit Timestamp(Minutes instant) : instant_(instant) {}

  // Returns nullopt unless the fields form a valid calendar date and time.
  // The fields are interpreted in a zone offset_minutes east of UTC.
  static std::optional<Timestamp> FromCivil(int year, int month, int day,
                                            int hour, int minute,
                                            int offset_minutes = 0);

  // Parses "YYYY-MM-DDTHH:MM[:SS][Z|+HH:MM|-HH:MM]". A missing zone means
  // UTC. Seconds are truncated. Throws TimestampFormatError.
  static Timestamp ParseIso(std::string_view text);

  // Renders "YYYY-MM-DDTHH:MMZ".
  std::string ToIso() const;

  // Current wall-clock time truncated to the minute.
  static Timestamp Now();

  Minutes instant() const { return instant_; }

  int year() const;
  int month() const;
  int day() const;
  int hour() const;
  int minute() const;

  auto operator<=>(const Timestamp &) const = default;

 private:
  Minutes instant_{};
};

}  // namespace selfreply

#endif  // SELFREPLY_TIMESTAMP_H_
