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

// The closed label set for the function of a thread's second message.

#ifndef SELFREPLY_CATEGORIES_H_
#define SELFREPLY_CATEGORIES_H_

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace selfreply {

// Numbers 1-7 are the typology and also the answers the prompt asks for.
// Error marks threads that do not actually open with a self-reply and is
// assigned by humans only. Null is a model abstention.
enum class CategoryLabel {
  kAddendum = 1,
  kSelfCorrection = 2,
  kSelfAnswer = 3,
  kChasingUp = 4,
  kActionReport = 5,
  kReactionToEvent = 6,
  kList = 7,
  kError = 8,
  kNull = 9,
};

inline constexpr int kFirstLabel = 1;
inline constexpr int kLastTypologyLabel = 7;
inline constexpr int kLastHumanLabel = 8;
inline constexpr int kLastLabel = 9;

inline int LabelNumber(CategoryLabel label) { return static_cast<int>(label); }

// nullopt outside 1..9.
std::optional<CategoryLabel> LabelFromNumber(int number);

inline bool IsTypologyLabel(CategoryLabel label) {
  return LabelNumber(label) <= kLastTypologyLabel;
}

// Display name, e.g. "Self-correction".
const char *CategoryName(CategoryLabel label);

// Definition used in annotation guidelines and the prompt. Empty for Null.
const char *CategoryDescription(CategoryLabel label);

// The seven typology labels in number order.
const std::array<CategoryLabel, 7> &TypologyLabels();

}  // namespace selfreply

#endif  // SELFREPLY_CATEGORIES_H_
