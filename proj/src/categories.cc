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

#include "selfreply/categories.h"

namespace selfreply {

namespace {

struct CategoryInfo {
  const char *name;
  const char *description;
};

// Indexed by label number. The typology definitions are the fixed wording of
// the annotation instrument and are rendered into the prompt unchanged.
constexpr CategoryInfo kCategories[] = {
    {"", ""},
    {"Addendum",
     "the user complements their first message with new information, a new "
     "scope, additional arguments or some kind of clarification;"},
    {"Self-correction",
     "the user has identified an error in their first message and corrects "
     "it, possibly cancelling the first message;"},
    {"Self-answer",
     "the user answers the question they asked in the first message;"},
    {"Chasing up",
     "having received no replies to his first message, the user asks other "
     "users for answers or reactions;"},
    {"Action report",
     "the user has done something since their first message and announces "
     "it;"},
    {"Reaction to event",
     "something has been done by someone else, or has happened since the "
     "first message and the user reacts to this event;"},
    {"List",
     "the first two messages constitute a list of items or the beginning of "
     "a list; these items can be pieces of information, things to do, "
     "remarks, questions etc."},
    {"Error",
     "only one message, first two messages by different authors, or "
     "unrelated messages (a processing error)."},
    {"Null", ""},
};

}  // namespace

std::optional<CategoryLabel> LabelFromNumber(int number) {
  if (number < kFirstLabel || number > kLastLabel) return std::nullopt;
  return static_cast<CategoryLabel>(number);
}

const char *CategoryName(CategoryLabel label) {
  return kCategories[LabelNumber(label)].name;
}

const char *CategoryDescription(CategoryLabel label) {
  return kCategories[LabelNumber(label)].description;
}

const std::array<CategoryLabel, 7> &TypologyLabels() {
  static const std::array<CategoryLabel, 7> kLabels = {
      CategoryLabel::kAddendum,     CategoryLabel::kSelfCorrection,
      CategoryLabel::kSelfAnswer,   CategoryLabel::kChasingUp,
      CategoryLabel::kActionReport, CategoryLabel::kReactionToEvent,
      CategoryLabel::kList};
  return kLabels;
}

}  // namespace selfreply
