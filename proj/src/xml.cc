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

#include "selfreply/xml.h"

#include "selfreply/errors.h"

namespace selfreply {

std::optional<std::string> XmlNode::Attribute(std::string_view key) const {
  for (const auto &[k, v] : attributes) {
    if (k == key) return v;
  }
  return std::nullopt;
}

std::string_view XmlNode::LocalName() const {
  std::string_view n = name;
  size_t colon = n.find(':');
  return colon == std::string_view::npos ? n : n.substr(colon + 1);
}

std::string XmlNode::InnerText() const {
  if (is_text()) return text;
  std::string result;
  for (const XmlNode &child : children) result += child.InnerText();
  return result;
}

namespace {

class XmlReader {
 public:
  explicit XmlReader(std::string_view text) : text_(text) {}

  XmlNode Document() {
    SkipMisc(true);
    if (AtEnd() || Peek() != '<') Fail("expected root element");
    XmlNode root = Element();
    SkipMisc(false);
    if (!AtEnd()) Fail("content after root element");
    return root;
  }

 private:
  bool AtEnd() const { return pos_ >= text_.size(); }
  char Peek() const { return text_[pos_]; }
  bool LookingAt(std::string_view s) const {
    return text_.substr(pos_).starts_with(s);
  }

  [[noreturn]] void Fail(const std::string &message) const {
    int line = 1, column = 1;
    for (size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        line++;
        column = 1;
      } else if ((static_cast<unsigned char>(text_[i]) & 0xC0) != 0x80) {
        column++;
      }
    }
    throw XmlParseError(message, line, column);
  }

  // Line of the current position. Positions only move forward, so the
  // count is kept incrementally.
  int CurrentLine() {
    for (size_t i = line_pos_; i < pos_; ++i) {
      if (text_[i] == '\n') line_count_++;
    }
    line_pos_ = pos_;
    return line_count_;
  }

  static bool IsSpace(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r';
  }
  static bool IsNameChar(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           (c >= '0' && c <= '9') || c == '_' || c == ':' || c == '-' ||
           c == '.' || static_cast<unsigned char>(c) >= 0x80;
  }

  void SkipSpace() {
    while (!AtEnd() && IsSpace(Peek())) pos_++;
  }

  // Comments, processing instructions and (in the prolog) DOCTYPE.
  void SkipMisc(bool prolog) {
    while (true) {
      SkipSpace();
      if (LookingAt("<!--")) {
        Comment();
      } else if (LookingAt("<?")) {
        size_t end = text_.find("?>", pos_ + 2);
        if (end == std::string_view::npos)
          Fail("unterminated processing instruction");
        pos_ = end + 2;
      } else if (prolog && LookingAt("<!DOCTYPE")) {
        Doctype();
      } else {
        return;
      }
    }
  }

  void Comment() {
    size_t end = text_.find("-->", pos_ + 4);
    if (end == std::string_view::npos) Fail("unterminated comment");
    pos_ = end + 3;
  }

  void Doctype() {
    int depth = 0;
    while (!AtEnd()) {
      char c = Peek();
      if (c == '[') depth++;
      if (c == ']') depth--;
      if (c == '>' && depth == 0) {
        pos_++;
        return;
      }
      pos_++;
    }
    Fail("unterminated DOCTYPE");
  }

  std::string Name() {
    size_t start = pos_;
    if (AtEnd() || !IsNameChar(Peek()) || Peek() == '-' || Peek() == '.' ||
        (Peek() >= '0' && Peek() <= '9')) {
      Fail("expected a name");
    }
    while (!AtEnd() && IsNameChar(Peek())) pos_++;
    return std::string(text_.substr(start, pos_ - start));
  }

  static void AppendUtf8(std::string *out, unsigned long cp) {
    if (cp < 0x80) {
      out->push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
      out->push_back(static_cast<char>(0xC0 | (cp >> 6)));
      out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
      out->push_back(static_cast<char>(0xE0 | (cp >> 12)));
      out->push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
      out->push_back(static_cast<char>(0xF0 | (cp >> 18)));
      out->push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
      out->push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
  }

  // Reads an entity reference at '&' and appends its replacement.
  void Reference(std::string *out) {
    size_t semi = text_.find(';', pos_);
    if (semi == std::string_view::npos || semi - pos_ > 12) {
      Fail("malformed entity reference");
    }
    std::string_view ref = text_.substr(pos_ + 1, semi - pos_ - 1);
    if (ref == "lt") {
      out->push_back('<');
    } else if (ref == "gt") {
      out->push_back('>');
    } else if (ref == "amp") {
      out->push_back('&');
    } else if (ref == "quot") {
      out->push_back('"');
    } else if (ref == "apos") {
      out->push_back('\'');
    } else if (ref.size() > 1 && ref[0] == '#') {
      unsigned long cp = 0;
      bool hex = ref[1] == 'x' || ref[1] == 'X';
      std::string_view digits = ref.substr(hex ? 2 : 1);
      if (digits.empty()) Fail("malformed character reference");
      for (char c : digits) {
        int d;
        if (c >= '0' && c <= '9') {
          d = c - '0';
        } else if (hex && c >= 'a' && c <= 'f') {
          d = c - 'a' + 10;
        } else if (hex && c >= 'A' && c <= 'F') {
          d = c - 'A' + 10;
        } else {
          Fail("malformed character reference");
        }
        cp = cp * (hex ? 16 : 10) + d;
        if (cp > 0x10FFFF) Fail("character reference out of range");
      }
      AppendUtf8(out, cp);
    } else {
      Fail("undeclared entity &" + std::string(ref) + ";");
    }
    pos_ = semi + 1;
  }

  std::string AttributeValue() {
    if (AtEnd() || (Peek() != '"' && Peek() != '\'')) {
      Fail("expected quoted attribute value");
    }
    char quote = Peek();
    pos_++;
    std::string value;
    while (true) {
      if (AtEnd()) Fail("unterminated attribute value");
      char c = Peek();
      if (c == quote) {
        pos_++;
        return value;
      }
      if (c == '<') Fail("'<' in attribute value");
      if (c == '&') {
        Reference(&value);
      } else {
        value.push_back(c);
        pos_++;
      }
    }
  }

  XmlNode Element() {
    XmlNode node;
    node.line = CurrentLine();
    pos_++;  // '<'
    node.name = Name();
    while (true) {
      bool spaced = !AtEnd() && IsSpace(Peek());
      SkipSpace();
      if (AtEnd()) Fail("unterminated start tag");
      if (LookingAt("/>")) {
        pos_ += 2;
        return node;
      }
      if (Peek() == '>') {
        pos_++;
        break;
      }
      if (!spaced) Fail("expected whitespace before attribute");
      std::string key = Name();
      SkipSpace();
      if (AtEnd() || Peek() != '=') Fail("expected '=' after attribute name");
      pos_++;
      SkipSpace();
      std::string value = AttributeValue();
      if (node.Attribute(key)) Fail("duplicate attribute " + key);
      node.attributes.emplace_back(std::move(key), std::move(value));
    }
    Content(&node);
    return node;
  }

  void AppendText(XmlNode *parent, std::string text) {
    if (text.empty()) return;
    if (!parent->children.empty() && parent->children.back().is_text()) {
      parent->children.back().text += text;
      return;
    }
    XmlNode node;
    node.text = std::move(text);
    parent->children.push_back(std::move(node));
  }

  void Content(XmlNode *parent) {
    std::string text;
    while (true) {
      if (AtEnd()) Fail("missing end tag </" + parent->name + ">");
      char c = Peek();
      if (c == '<') {
        if (LookingAt("</")) {
          AppendText(parent, std::move(text));
          pos_ += 2;
          std::string name = Name();
          if (name != parent->name) {
            Fail("end tag </" + name + "> does not match <" + parent->name +
                 ">");
          }
          SkipSpace();
          if (AtEnd() || Peek() != '>') Fail("expected '>'");
          pos_++;
          return;
        }
        if (LookingAt("<!--")) {
          Comment();
        } else if (LookingAt("<![CDATA[")) {
          size_t end = text_.find("]]>", pos_ + 9);
          if (end == std::string_view::npos) Fail("unterminated CDATA section");
          text.append(text_.substr(pos_ + 9, end - pos_ - 9));
          pos_ = end + 3;
        } else if (LookingAt("<?")) {
          size_t end = text_.find("?>", pos_ + 2);
          if (end == std::string_view::npos)
            Fail("unterminated processing instruction");
          pos_ = end + 2;
        } else {
          AppendText(parent, std::move(text));
          text.clear();
          parent->children.push_back(Element());
        }
      } else if (c == '&') {
        Reference(&text);
      } else {
        text.push_back(c);
        pos_++;
      }
    }
  }

  std::string_view text_;
  size_t pos_ = 0;
  size_t line_pos_ = 0;
  int line_count_ = 1;
};

}  // namespace

XmlNode ParseXml(std::string_view text) {
  XmlReader reader(text);
  return reader.Document();
}

}  // namespace selfreply
