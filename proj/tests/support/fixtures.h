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

#ifndef SELFREPLY_TESTS_SUPPORT_FIXTURES_H_
#define SELFREPLY_TESTS_SUPPORT_FIXTURES_H_

#include <unistd.h>

#include <filesystem>
#include <string>

#include "selfreply/locale-profile.h"
#include "selfreply/text-util.h"
#include "selfreply/wikitext.h"

namespace selfreply::testing {

inline std::string TestDataPath(const std::string &name) {
  return std::string(SELFREPLY_TEST_DATA) + "/" + name;
}

inline const LocaleProfile &Locale(Language language) {
  static const LocaleProfile en =
      LocaleProfile::Load(LocaleProfile::DefaultDirectory(), Language::kEn);
  static const LocaleProfile fr =
      LocaleProfile::Load(LocaleProfile::DefaultDirectory(), Language::kFr);
  static const LocaleProfile de =
      LocaleProfile::Load(LocaleProfile::DefaultDirectory(), Language::kDe);
  switch (language) {
    case Language::kFr:
      return fr;
    case Language::kDe:
      return de;
    case Language::kEn:
      break;
  }
  return en;
}

// Parses tests/data/<name>.wiki as an English talk page titled <name>.
inline TalkPage ParseFixture(const std::string &name) {
  RawPage page{name, ReadFile(TestDataPath(name + ".wiki")), Language::kEn};
  return ParseTalkWikitext(page, Locale(Language::kEn));
}

// A fresh empty directory under the system temporary directory.
inline std::string ScratchDirectory(const std::string &name) {
  std::filesystem::path dir =
      std::filesystem::temp_directory_path() /
      ("selfreply-test-" + name + "-" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir.string();
}

}  // namespace selfreply::testing

#endif  // SELFREPLY_TESTS_SUPPORT_FIXTURES_H_
