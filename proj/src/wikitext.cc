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

#include "selfreply/wikitext.h"

#include <algorithm>
#include <map>

#include "selfreply/errors.h"
#include "selfreply/text-util.h"

namespace selfreply {

namespace {

// Longest text allowed between the last identity link and the timestamp,
// and between the links of one signature.
constexpr size_t kMaxSignatureGap = 80;

// Longest parenthesized group skipped as signature decoration, e.g.
// "(talk)" or "(talk · contribs)".
constexpr size_t kMaxDecoration = 48;

// A wiki link naming a user: [[User:X]], [[User talk:X]],
// [[Special:Contributions/X]] and their localized forms.
struct UserLink {
  size_t begin;
  size_t end;
  std::string name;
};

bool IsSpaceByte(char c) { return c == ' ' || c == '\t' || c == '\r'; }

bool IsAlnumByte(char c) {
  return IsDigit(c) || IsAsciiAlpha(c) || static_cast<unsigned char>(c) >= 0x80;
}

// Normalizes a link target: leading colon dropped, underscores as spaces.
std::string LinkTarget(std::string_view inner) {
  size_t bar = inner.find('|');
  std::string_view target = TrimView(inner.substr(0, bar));
  if (!target.empty() && target.front() == ':') target.remove_prefix(1);
  std::string result(TrimView(target));
  std::replace(result.begin(), result.end(), '_', ' ');
  return result;
}

std::optional<std::string> UserFromTarget(const std::string &target,
                                          const LocaleProfile &locale) {
  size_t colon = target.find(':');
  if (colon == std::string::npos) return std::nullopt;
  std::string_view ns = TrimView(std::string_view(target).substr(0, colon));
  std::string_view rest = std::string_view(target).substr(colon + 1);

  for (const std::string &page : locale.contribution_pages()) {
    size_t page_colon = page.find(':');
    std::string_view page_ns = std::string_view(page).substr(0, page_colon);
    std::string_view page_name = std::string_view(page).substr(page_colon + 1);
    if (!EqualsIgnoreCaseAscii(ns, page_ns)) continue;
    if (rest.size() <= page_name.size() + 1) continue;
    if (!EqualsIgnoreCaseAscii(rest.substr(0, page_name.size()), page_name)) {
      continue;
    }
    if (rest[page_name.size()] != '/') continue;
    std::string_view name = rest.substr(page_name.size() + 1);
    name = name.substr(0, name.find('#'));
    name = TrimView(name);
    if (name.empty()) return std::nullopt;
    return std::string(name);
  }

  for (const std::string &user_ns : locale.user_namespaces()) {
    if (!EqualsIgnoreCaseAscii(ns, user_ns)) continue;
    std::string_view name = rest.substr(0, rest.find_first_of("/#"));
    name = TrimView(name);
    if (name.empty()) return std::nullopt;
    return std::string(name);
  }
  return std::nullopt;
}

std::vector<UserLink> FindUserLinks(std::string_view line,
                                    const LocaleProfile &locale) {
  std::vector<UserLink> links;
  size_t pos = 0;
  while ((pos = line.find("[[", pos)) != std::string_view::npos) {
    size_t close = line.find("]]", pos + 2);
    if (close == std::string_view::npos) break;
    size_t nested = line.find("[[", pos + 2);
    if (nested != std::string_view::npos && nested < close) {
      pos = nested;
      continue;
    }
    std::string target = LinkTarget(line.substr(pos + 2, close - pos - 2));
    if (auto name = UserFromTarget(target, locale)) {
      links.push_back({pos, close + 2, std::move(*name)});
    }
    pos = close + 2;
  }
  return links;
}

// True if the text between two parts of a signature is only decoration:
// whitespace, HTML tags, bold/italic quotes, separators and short
// parenthesized groups such as "(talk)".
bool IsDecoration(std::string_view gap) {
  if (gap.size() > kMaxSignatureGap) return false;
  size_t i = 0;
  while (i < gap.size()) {
    char c = gap[i];
    if (size_t n = SpaceLength(gap, i); n > 0) {
      i += n;
    } else if (c == '<') {
      size_t close = gap.find('>', i);
      if (close == std::string_view::npos) return false;
      i = close + 1;
    } else if (c == '(') {
      size_t close = gap.find(')', i);
      if (close == std::string_view::npos) {
        // An opening parenthesis of a talk link group.
        i++;
      } else {
        if (close - i > kMaxDecoration) return false;
        i = close + 1;
      }
    } else if (std::string_view(")|/'.,:;-*~[]").find(c) !=
               std::string_view::npos) {
      i++;
    } else if (gap.substr(i).starts_with("\xC2\xB7") ||      // middle dot
               gap.substr(i).starts_with("\xE2\x80\xA2") ||  // bullet
               gap.substr(i).starts_with("\xE2\x80\x94") ||  // em dash
               gap.substr(i).starts_with("\xE2\x80\x93")) {  // en dash
      i += gap[i] == '\xC2' ? 2 : 3;
    } else {
      return false;
    }
  }
  return true;
}

// Moves a signature start leftwards over dashes, opening tags, quote
// markup and known boilerplate prefixes that belong to the signature.
size_t AbsorbLeft(std::string_view line, size_t begin,
                  const LocaleProfile &locale) {
  bool changed = true;
  while (changed) {
    changed = false;
    size_t p = begin;
    while (p > 0 && IsSpaceByte(line[p - 1])) p--;
    std::string_view before = line.substr(0, p);
    if (before.ends_with("--")) {
      while (p > 0 && line[p - 1] == '-') p--;
      begin = p;
      changed = true;
    } else if (before.ends_with("\xE2\x80\x94") ||
               before.ends_with("\xE2\x80\x93")) {
      begin = p - 3;
      changed = true;
    } else if (before.ends_with("'''") || before.ends_with("''")) {
      if (p == begin) {
        while (p > 0 && line[p - 1] == '\'') p--;
        begin = p;
        changed = true;
      }
    } else if (before.ends_with(">") && p == begin) {
      size_t open = before.rfind('<');
      if (open != std::string_view::npos && open + 1 < p &&
          line[open + 1] != '/' && line[open + 1] != '!') {
        begin = open;
        changed = true;
      }
    } else {
      for (const std::string &prefix : locale.signature_prefixes()) {
        if (before.ends_with(prefix)) {
          begin = p - prefix.size();
          changed = true;
          break;
        }
      }
    }
  }
  return begin;
}

// Moves a signature end rightwards over closing tags.
size_t AbsorbRight(std::string_view line, size_t end) {
  while (true) {
    size_t p = end;
    while (p < line.size() && IsSpaceByte(line[p])) p++;
    if (line.substr(p).starts_with("</")) {
      size_t close = line.find('>', p);
      if (close == std::string_view::npos) break;
      end = close + 1;
    } else {
      break;
    }
  }
  return end;
}

// Extends a link group leftwards over earlier links to the same user.
// Returns the index of the first link of the group.
size_t GroupStart(std::string_view line, const std::vector<UserLink> &links,
                  size_t last, const UserId &author, const BotRuleset &bots) {
  size_t first = last;
  while (first > 0) {
    const UserLink &previous = links[first - 1];
    std::string_view gap =
        line.substr(previous.end, links[first].begin - previous.end);
    if (!IsDecoration(gap)) break;
    UserId other;
    try {
      other = NormalizeAuthor(previous.name, bots);
    } catch (const InvalidAuthorError &) {
      break;
    }
    if (!SameAuthor(other, author)) break;
    first--;
  }
  return first;
}

// For IP users, the address is often written out before the talk link:
// "198.6.46.11 ([[User talk:198.6.46.11|talk]])".
size_t AbsorbBareName(std::string_view line, size_t begin,
                      const UserId &author) {
  if (author.kind != UserKind::kIp) return begin;
  size_t p = begin;
  while (p > 0 && (IsSpaceByte(line[p - 1]) || line[p - 1] == '(')) p--;
  size_t end = p;
  while (p > 0 && !IsSpaceByte(line[p - 1]) && line[p - 1] != '(' &&
         line[p - 1] != ']') {
    p--;
  }
  if (p == end) return begin;
  UserId bare;
  try {
    bare = NormalizeAuthor(line.substr(p, end - p));
  } catch (const InvalidAuthorError &) {
    return begin;
  }
  return SameAuthor(bare, author) ? p : begin;
}

// An IP address written as plain text right before position end, possibly
// followed by a short "(talk)" group.
std::optional<std::pair<size_t, UserId>> BareIpBefore(std::string_view line,
                                                      size_t end) {
  size_t p = end;
  while (p > 0 && IsSpaceByte(line[p - 1])) p--;
  if (p > 0 && line[p - 1] == ')') {
    size_t open = line.rfind('(', p - 1);
    if (open == std::string_view::npos || p - open > kMaxDecoration) {
      return std::nullopt;
    }
    p = open;
    while (p > 0 && IsSpaceByte(line[p - 1])) p--;
  }
  size_t token_end = p;
  while (p > 0) {
    char c = line[p - 1];
    if (IsDigit(c) || (c >= 'a' && c <= 'f') || (c >= 'A' && c <= 'F') ||
        c == '.' || c == ':') {
      p--;
    } else {
      break;
    }
  }
  if (p == token_end) return std::nullopt;
  if (p > 0 && IsAlnumByte(line[p - 1])) return std::nullopt;
  std::string_view token = line.substr(p, token_end - p);
  // A sentence-final period is not part of the address.
  if (!IsIpAddress(token)) return std::nullopt;
  return std::make_pair(p, UserId{UserKind::kIp, std::string(token)});
}

std::optional<Signature> DatedSignature(std::string_view line,
                                        const TimestampMatch &stamp,
                                        const std::vector<UserLink> &links,
                                        const LocaleProfile &locale,
                                        const BotRuleset &bots) {
  // Rightmost link ending before the timestamp.
  size_t count = 0;
  while (count < links.size() && links[count].end <= stamp.begin) count++;
  if (count > 0) {
    const UserLink &last = links[count - 1];
    std::string_view gap = line.substr(last.end, stamp.begin - last.end);
    if (IsDecoration(gap)) {
      try {
        UserId author = NormalizeAuthor(last.name, bots);
        size_t first = GroupStart(line, links, count - 1, author, bots);
        // Prefer the name of the user page link over the talk link.
        author = NormalizeAuthor(links[first].name, bots);
        size_t begin = AbsorbBareName(line, links[first].begin, author);
        begin = AbsorbLeft(line, begin, locale);
        return Signature{author, stamp.when, begin,
                         AbsorbRight(line, stamp.end)};
      } catch (const InvalidAuthorError &) {
        return std::nullopt;
      }
    }
  }
  if (auto ip = BareIpBefore(line, stamp.begin)) {
    UserId author = NormalizeAuthor(ip->second.value, bots);
    size_t begin = AbsorbLeft(line, ip->first, locale);
    return Signature{author, stamp.when, begin, AbsorbRight(line, stamp.end)};
  }
  return std::nullopt;
}

// {{unsigned|User|date}} and localized equivalents.
std::optional<Signature> TemplateSignature(std::string_view line,
                                           const LocaleProfile &locale,
                                           const BotRuleset &bots) {
  if (locale.unsigned_templates().empty()) return std::nullopt;
  size_t pos = line.rfind("{{");
  while (pos != std::string_view::npos) {
    size_t close = line.find("}}", pos);
    if (close != std::string_view::npos) {
      std::string_view inner = line.substr(pos + 2, close - pos - 2);
      std::vector<std::string_view> parts;
      size_t start = 0;
      while (true) {
        size_t bar = inner.find('|', start);
        parts.push_back(inner.substr(start, bar - start));
        if (bar == std::string_view::npos) break;
        start = bar + 1;
      }
      std::string name(TrimView(parts[0]));
      std::replace(name.begin(), name.end(), '_', ' ');
      bool known = std::any_of(locale.unsigned_templates().begin(),
                               locale.unsigned_templates().end(),
                               [&name](const std::string &t) {
                                 return EqualsIgnoreCaseAscii(t, name);
                               });
      if (known && parts.size() >= 2) {
        auto value = [](std::string_view p) {
          p = TrimView(p);
          size_t eq = p.find('=');
          if (eq != std::string_view::npos && eq < 3) p = p.substr(eq + 1);
          return TrimView(p);
        };
        try {
          Signature sig;
          sig.author = NormalizeAuthor(value(parts[1]), bots);
          if (parts.size() >= 3) {
            try {
              sig.when = ParseTimestamp(value(parts[2]), locale);
            } catch (const TimestampFormatError &) {
            }
          }
          sig.begin = AbsorbLeft(line, pos, locale);
          sig.end = close + 2;
          return sig;
        } catch (const InvalidAuthorError &) {
        }
      }
    }
    if (pos == 0) break;
    pos = line.rfind("{{", pos - 1);
  }
  return std::nullopt;
}

// A user link group closing the line with no parseable timestamp.
std::optional<Signature> UndatedSignature(std::string_view line,
                                          const std::vector<UserLink> &links,
                                          const LocaleProfile &locale,
                                          const BotRuleset &bots) {
  if (links.empty()) return std::nullopt;
  size_t last = links.size() - 1;
  std::string_view tail = TrimView(line.substr(links[last].end));
  size_t line_end =
      TrimView(line).empty()
          ? line.size()
          : static_cast<size_t>(TrimView(line).data() + TrimView(line).size() -
                                line.data());
  bool date_like = false;
  if (!IsDecoration(tail)) {
    // A timestamp that failed to parse, e.g. with an unknown zone label.
    std::string_view rest = tail;
    while (!rest.empty() &&
           (rest.front() == ')' || IsSpaceByte(rest.front()))) {
      rest.remove_prefix(1);
    }
    if (rest.empty() || !IsDigit(rest.front()) || rest.back() != ')' ||
        rest.size() > 60) {
      return std::nullopt;
    }
    date_like = true;
  }
  UserId author;
  try {
    author = NormalizeAuthor(links[last].name, bots);
  } catch (const InvalidAuthorError &) {
    return std::nullopt;
  }
  size_t first = GroupStart(line, links, last, author, bots);
  author = NormalizeAuthor(links[first].name, bots);
  size_t begin = AbsorbBareName(line, links[first].begin, author);
  size_t absorbed = AbsorbLeft(line, begin, locale);
  // A lone user link is only a signature when marked as one.
  bool marked =
      absorbed < begin &&
      line.substr(absorbed, begin - absorbed).find_first_of("-\xE2") !=
          std::string_view::npos;
  if (first == last && !marked && !date_like) return std::nullopt;
  return Signature{author, std::nullopt, absorbed, line_end};
}

std::optional<Signature> LastSignature(std::string_view line,
                                       const LocaleProfile &locale,
                                       const BotRuleset &bots,
                                       bool allow_undated) {
  std::vector<UserLink> links = FindUserLinks(line, locale);
  std::vector<TimestampMatch> stamps = FindTimestamps(line, locale);

  std::optional<Signature> best;
  auto consider = [&best](std::optional<Signature> candidate) {
    if (candidate && (!best || candidate->end > best->end)) best = candidate;
  };
  for (auto it = stamps.rbegin(); it != stamps.rend(); ++it) {
    if (auto sig = DatedSignature(line, *it, links, locale, bots)) {
      consider(sig);
      break;
    }
  }
  consider(TemplateSignature(line, locale, bots));
  if (allow_undated) consider(UndatedSignature(line, links, locale, bots));
  return best;
}

}  // namespace

std::optional<Signature> ParseSignature(std::string_view line,
                                        const LocaleProfile &locale,
                                        const BotRuleset &bots) {
  return LastSignature(line, locale, bots, true);
}

std::vector<Signature> FindSignatures(std::string_view line,
                                      const LocaleProfile &locale,
                                      const BotRuleset &bots) {
  std::vector<Signature> result;
  size_t limit = line.size();
  bool allow_undated = true;
  while (limit > 0) {
    auto sig =
        LastSignature(line.substr(0, limit), locale, bots, allow_undated);
    if (!sig || sig->begin >= limit) break;
    result.push_back(*sig);
    limit = sig->begin;
    // Undated signatures only make sense at the real end of a line.
    allow_undated = false;
  }
  std::reverse(result.begin(), result.end());
  return result;
}

std::string MaskWikitext(std::string_view wikitext) {
  std::string masked(wikitext);
  auto blank = [&masked](size_t begin, size_t end) {
    for (size_t i = begin; i < end; ++i) {
      if (masked[i] != '\n') masked[i] = ' ';
    }
  };
  std::string lower = ToLowerAscii(wikitext);
  size_t pos = 0;
  while (pos < masked.size()) {
    size_t comment = lower.find("<!--", pos);
    size_t nowiki = lower.find("<nowiki", pos);
    if (comment == std::string::npos && nowiki == std::string::npos) break;
    if (comment != std::string::npos &&
        (nowiki == std::string::npos || comment < nowiki)) {
      size_t end = lower.find("-->", comment + 4);
      end = end == std::string::npos ? masked.size() : end + 3;
      blank(comment, end);
      pos = end;
    } else {
      size_t tag_end = lower.find('>', nowiki);
      if (tag_end == std::string::npos) break;
      if (lower[tag_end - 1] == '/') {
        blank(nowiki, tag_end + 1);
        pos = tag_end + 1;
        continue;
      }
      size_t close = lower.find("</nowiki>", tag_end);
      size_t end = close == std::string::npos ? masked.size() : close + 9;
      blank(nowiki, end);
      pos = end;
    }
  }
  return masked;
}

namespace {

// Heading text of a level-2 heading line, or nullopt.
std::optional<std::string> LevelTwoHeading(std::string_view line) {
  std::string_view text = TrimView(line);
  if (text.size() < 5 || !text.starts_with("==") || text[2] == '=') {
    return std::nullopt;
  }
  if (!text.ends_with("==") || text[text.size() - 3] == '=') {
    return std::nullopt;
  }
  std::string_view inner = TrimView(text.substr(2, text.size() - 4));
  if (inner.empty()) return std::nullopt;
  std::string heading;
  bool space = false;
  for (size_t i = 0; i < inner.size();) {
    if (size_t n = SpaceLength(inner, i); n > 0) {
      space = true;
      i += n;
      continue;
    }
    if (space && !heading.empty()) heading.push_back(' ');
    space = false;
    heading.push_back(inner[i++]);
  }
  return heading;
}

bool HasAlnum(std::string_view text) {
  return std::any_of(text.begin(), text.end(), IsAlnumByte);
}

struct Section {
  std::string heading;
  size_t heading_begin;
  size_t heading_end;
  size_t body_begin;
  size_t body_end;
};

// Offsets of the trimmed part of text[begin, end).
std::pair<size_t, size_t> TrimRange(std::string_view text, size_t begin,
                                    size_t end) {
  std::string_view part = text.substr(begin, end - begin);
  std::string_view trimmed = TrimView(part);
  if (trimmed.empty()) return {begin, begin};
  size_t offset = trimmed.data() - part.data();
  return {begin + offset, begin + offset + trimmed.size()};
}

}  // namespace

TalkPage ParseTalkWikitext(const RawPage &page, const LocaleProfile &locale,
                           const BotRuleset &bots) {
  TalkPage result;
  result.title = page.title;
  const std::string &text = page.wikitext;
  std::string masked = MaskWikitext(text);

  // Locate level-2 headings.
  std::vector<Section> sections;
  size_t pos = 0;
  while (pos <= masked.size()) {
    size_t end = masked.find('\n', pos);
    if (end == std::string::npos) end = masked.size();
    std::string_view line(masked.data() + pos, end - pos);
    if (auto heading = LevelTwoHeading(line)) {
      if (!sections.empty()) sections.back().body_end = pos;
      sections.push_back({*heading, pos, end, std::min(end + 1, masked.size()),
                          masked.size()});
    }
    if (end == masked.size()) break;
    pos = end + 1;
  }

  std::map<std::string, int> occurrences;
  for (const Section &section : sections) {
    Thread thread;
    thread.heading = section.heading;
    thread.page = page.title;
    thread.language = page.language;
    thread.id = MakeThreadId(page.title, section.heading,
                             ++occurrences[section.heading]);
    ThreadLayout layout;
    layout.heading_begin = section.heading_begin;
    layout.heading_end = section.heading_end;

    size_t previous = section.body_begin;
    size_t line_begin = section.body_begin;
    while (line_begin < section.body_end) {
      size_t line_end = masked.find('\n', line_begin);
      if (line_end == std::string::npos || line_end > section.body_end) {
        line_end = section.body_end;
      }
      std::string_view line(masked.data() + line_begin, line_end - line_begin);
      for (const Signature &sig : FindSignatures(line, locale, bots)) {
        size_t sig_begin = line_begin + sig.begin;
        size_t sig_end = line_begin + sig.end;
        auto [body_begin, body_end] = TrimRange(text, previous, sig_begin);
        Post post;
        post.author = sig.author;
        post.when = sig.when;
        post.is_signed = true;
        post.body = text.substr(body_begin, body_end - body_begin);
        thread.posts.push_back(std::move(post));
        layout.posts.push_back({body_begin, body_end, sig_begin, sig_end});
        previous = sig_end;
      }
      line_begin = line_end + 1;
    }

    // Text after the last signature.
    auto [rest_begin, rest_end] = TrimRange(text, previous, section.body_end);
    if (rest_end > rest_begin) {
      std::string_view rest_masked(masked.data() + rest_begin,
                                   rest_end - rest_begin);
      if (!layout.posts.empty() && !HasAlnum(rest_masked)) {
        // Markup left over after a signature (closing templates, rules).
        layout.posts.back().signature_end = rest_end;
      } else {
        Post post;
        post.body = text.substr(rest_begin, rest_end - rest_begin);
        thread.posts.push_back(std::move(post));
        layout.posts.push_back({rest_begin, rest_end, rest_end, rest_end});
      }
    }
    RenumberPosts(&thread);
    result.threads.push_back(std::move(thread));
    result.layout.push_back(std::move(layout));
  }
  return result;
}

}  // namespace selfreply
