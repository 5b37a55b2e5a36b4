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

// Minimal non-validating XML reader producing a small DOM. Handles
// elements, attributes, character and predefined entity references,
// comments, CDATA sections, processing instructions and an internal
// DOCTYPE without entity declarations. Namespace prefixes are kept as part
// of names.

#ifndef SELFREPLY_XML_H_
#define SELFREPLY_XML_H_

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace selfreply {

struct XmlNode {
  // Elements have a name; text nodes have an empty name and carry text.
  std::string name;
  std::string text;
  std::vector<std::pair<std::string, std::string>> attributes;
  std::vector<XmlNode> children;
  int line = 0;

  bool is_text() const { return name.empty(); }
  std::optional<std::string> Attribute(std::string_view key) const;

  // Local name without namespace prefix.
  std::string_view LocalName() const;

  // Concatenated text of all descendants.
  std::string InnerText() const;
};

// Parses a complete document and returns its root element. Throws
// XmlParseError with the line and column of the first problem.
XmlNode ParseXml(std::string_view text);

}  // namespace selfreply

#endif  // SELFREPLY_XML_H_
