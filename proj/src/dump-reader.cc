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

#include "selfreply/dump-reader.h"

#include <algorithm>
#include <filesystem>

#include "selfreply/errors.h"
#include "selfreply/text-util.h"
#include "selfreply/xml.h"

namespace selfreply {

namespace {

constexpr size_t kChunkSize = 1 << 20;

const XmlNode *Child(const XmlNode &node, std::string_view name) {
  for (const XmlNode &child : node.children) {
    if (!child.is_text() && child.LocalName() == name) return &child;
  }
  return nullptr;
}

}  // namespace

DumpReader::DumpReader(std::istream *input, Language language,
                       std::optional<int> namespace_filter)
    : input_(input), language_(language), namespace_filter_(namespace_filter) {}

bool DumpReader::Fill() {
  if (eof_) return false;
  std::string chunk(kChunkSize, '\0');
  input_->read(chunk.data(), chunk.size());
  std::streamsize n = input_->gcount();
  if (n <= 0) {
    eof_ = true;
    return false;
  }
  buffer_.append(chunk.data(), n);
  return true;
}

std::optional<RawPage> DumpReader::Next() {
  while (true) {
    size_t begin = buffer_.find("<page>");
    size_t end = begin == std::string::npos ? std::string::npos
                                            : buffer_.find("</page>", begin);
    if (end == std::string::npos) {
      if (begin == std::string::npos && buffer_.size() > 16) {
        // Keep a tail in case "<page>" straddles two chunks.
        buffer_.erase(0, buffer_.size() - 16);
      }
      if (!Fill()) return std::nullopt;
      continue;
    }
    end += 7;
    XmlNode page =
        ParseXml(std::string_view(buffer_).substr(begin, end - begin));
    buffer_.erase(0, end);

    if (namespace_filter_) {
      const XmlNode *ns = Child(page, "ns");
      if (ns == nullptr ||
          Trim(ns->InnerText()) != std::to_string(*namespace_filter_)) {
        continue;
      }
    }
    RawPage raw;
    raw.language = language_;
    if (const XmlNode *title = Child(page, "title")) {
      raw.title = Trim(title->InnerText());
    }
    const XmlNode *last_text = nullptr;
    for (const XmlNode &child : page.children) {
      if (child.is_text() || child.LocalName() != "revision") continue;
      if (const XmlNode *text = Child(child, "text")) last_text = text;
    }
    if (last_text != nullptr) raw.wikitext = last_text->InnerText();
    if (raw.title.empty()) continue;
    return raw;
  }
}

std::vector<RawPage> ReadWikiDirectory(const std::string &dir,
                                       Language language) {
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  for (const auto &entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".wiki") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  std::vector<RawPage> pages;
  for (const fs::path &file : files) {
    RawPage page;
    page.title = file.stem().string();
    std::replace(page.title.begin(), page.title.end(), '_', ' ');
    page.wikitext = ReadFile(file.string());
    page.language = language;
    pages.push_back(std::move(page));
  }
  return pages;
}

}  // namespace selfreply
