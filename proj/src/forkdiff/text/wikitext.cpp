// Copyright 2026 The forkdiff Authors
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

#include "forkdiff/text/wikitext.hpp"

#include <array>
#include <unordered_set>

#include "forkdiff/text/domains.hpp"
#include "forkdiff/text/sentences.hpp"
#include "forkdiff/text/unicode_norm.hpp"
#include "forkdiff/util/strings.hpp"

namespace forkdiff {

namespace {

constexpr std::array<std::string_view, 4> kCategoryPrefixes = {
    "категория:", "category:", "кат:", "cat:"};
constexpr std::array<std::string_view, 4> kMediaPrefixes = {
    "файл:", "file:", "изображение:", "image:"};

// Tags whose body never contributes prose.
const std::unordered_set<std::string>& opaque_tags() {
  static const std::unordered_set<std::string> kOpaque = {
      "nowiki", "math",  "code",  "pre", "syntaxhighlight",
      "source", "score", "gallery", "timeline", "graph", "mapframe",
  };
  return kOpaque;
}

bool has_prefix_ci(std::string_view text, std::string_view prefix) {
  return starts_with_ci(text, prefix);
}

std::string normalize_title(std::string_view raw) {
  std::string s(raw);
  for (char& c : s) {
    if (c == '_') c = ' ';
  }
  return collapse_whitespace(s);
}

// Canonical first-letter-uppercase form used as template identity.
std::string normalize_template_name(std::string_view raw) {
  std::string s = collapse_whitespace(raw);
  auto cps = utf8_decode(s);
  if (!cps.empty()) {
    char32_t c = cps[0];
    if (c >= U'a' && c <= U'z') {
      cps[0] = c - 32;
    } else if (c >= 0x0430 && c <= 0x044F) {  // Cyrillic а..я
      cps[0] = c - 32;
    } else if (c == 0x0451) {  // ё
      cps[0] = 0x0401;
    }
  }
  return utf8_encode(cps);
}

void extract_urls(std::string_view text, std::vector<Reference>* out,
                  std::unordered_set<std::string>* seen) {
  size_t pos = 0;
  while (pos < text.size()) {
    size_t hit = text.find("http", pos);
    if (hit == std::string_view::npos) return;
    size_t start = hit;
    std::string_view rest = text.substr(hit);
    size_t scheme_len = 0;
    if (rest.substr(0, 8) == "https://") {
      scheme_len = 8;
    } else if (rest.substr(0, 7) == "http://") {
      scheme_len = 7;
    } else {
      pos = hit + 4;
      continue;
    }
    size_t end = start + scheme_len;
    while (end < text.size()) {
      char c = text[end];
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '<' ||
          c == '>' || c == '|' || c == ']' || c == '[' || c == '}' ||
          c == '{' || c == '"') {
        break;
      }
      ++end;
    }
    std::string url(text.substr(start, end - start));
    while (!url.empty() &&
           (url.back() == '.' || url.back() == ',' || url.back() == ';' ||
            url.back() == ')')) {
      url.pop_back();
    }
    if (url.size() > scheme_len && seen->insert(url).second) {
      out->push_back(Reference{url, registrable_domain(url)});
    }
    pos = end;
  }
}

constexpr std::array<std::pair<std::string_view, std::string_view>, 6>
    kEntities = {{{"&nbsp;", " "},
                  {"&amp;", "&"},
                  {"&lt;", "<"},
                  {"&gt;", ">"},
                  {"&quot;", "\""},
                  {"&mdash;", "—"}}};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  WikitextElements run() {
    while (pos_ < text_.size()) {
      if (at_line_start_) {
        handle_line_start();
        if (pos_ >= text_.size()) break;
      }
      step();
    }
    flush_block();
    for (const std::string& block : blocks_) {
      for (auto& s : segment_sentences(block)) {
        out_.sentences.push_back(std::move(s));
      }
    }
    return std::move(out_);
  }

 private:
  std::string_view text_;
  size_t pos_ = 0;
  bool at_line_start_ = true;
  std::string block_;
  std::vector<std::string> blocks_;
  WikitextElements out_;
  std::unordered_set<std::string> seen_urls_;

  bool lookahead(std::string_view token) const {
    return text_.substr(pos_, token.size()) == token;
  }

  bool lookahead_ci(std::string_view token) const {
    return starts_with_ci(text_.substr(pos_), token);
  }

  void flush_block() {
    std::string s = collapse_whitespace(block_);
    block_.clear();
    if (!s.empty()) blocks_.push_back(std::move(s));
  }

  // Line-oriented constructs: headings, tables, list markers, magic words.
  void handle_line_start() {
    at_line_start_ = false;
    if (lookahead("{|")) {
      skip_table();
      return;
    }
    if (lookahead("=") && line_is_heading()) {
      skip_line();  // headings are structure, not prose
      return;
    }
    while (pos_ < text_.size() &&
           (text_[pos_] == '*' || text_[pos_] == '#' || text_[pos_] == ':' ||
            text_[pos_] == ';')) {
      ++pos_;  // strip list markers, the item text remains a block
    }
  }

  bool line_is_heading() const {
    size_t eol = text_.find('\n', pos_);
    std::string_view line = text_.substr(
        pos_, eol == std::string_view::npos ? std::string_view::npos
                                            : eol - pos_);
    std::string t = trim(line);
    return t.size() >= 2 && t.front() == '=' && t.back() == '=';
  }

  void skip_line() {
    size_t eol = text_.find('\n', pos_);
    if (eol == std::string_view::npos) {
      pos_ = text_.size();
    } else {
      pos_ = eol + 1;
      at_line_start_ = true;
    }
    flush_block();
  }

  void skip_table() {
    size_t search = pos_ + 2;
    int depth = 1;
    while (search < text_.size()) {
      size_t open = text_.find("\n{|", search);
      size_t close = text_.find("\n|}", search);
      if (close == std::string_view::npos) {
        ++out_.malformed_constructs;
        pos_ = text_.size();
        return;
      }
      if (open != std::string_view::npos && open < close) {
        ++depth;
        search = open + 3;
        continue;
      }
      if (--depth == 0) {
        size_t eol = text_.find('\n', close + 1);
        pos_ = eol == std::string_view::npos ? text_.size() : eol + 1;
        at_line_start_ = true;
        return;
      }
      search = close + 3;
    }
    ++out_.malformed_constructs;
    pos_ = text_.size();
  }

  void step() {
    char c = text_[pos_];
    if (c == '\n') {
      flush_block();
      ++pos_;
      at_line_start_ = true;
      return;
    }
    if (lookahead("<!--")) {
      size_t end = text_.find("-->", pos_ + 4);
      if (end == std::string_view::npos) {
        ++out_.malformed_constructs;
        pos_ = text_.size();
      } else {
        pos_ = end + 3;
      }
      return;
    }
    if (lookahead("{{")) {
      parse_template();
      return;
    }
    if (lookahead("[[")) {
      parse_link();
      return;
    }
    if (lookahead("[") && (lookahead_ci("[http://") || lookahead_ci("[https://"))) {
      parse_external_link();
      return;
    }
    if (lookahead_ci("<ref")) {
      parse_ref();
      return;
    }
    if (c == '<') {
      parse_html_tag();
      return;
    }
    if (lookahead("''")) {
      pos_ += 2;
      while (pos_ < text_.size() && text_[pos_] == '\'') ++pos_;
      return;
    }
    if (lookahead("__") && parse_magic_word()) return;
    if (c == '&') {
      for (const auto& [entity, replacement] : kEntities) {
        if (lookahead(entity)) {
          block_ += replacement;
          pos_ += entity.size();
          return;
        }
      }
    }
    block_.push_back(c);
    ++pos_;
  }

  bool parse_magic_word() {
    size_t end = text_.find("__", pos_ + 2);
    if (end == std::string_view::npos || end - pos_ > 32) return false;
    std::string_view word = text_.substr(pos_ + 2, end - pos_ - 2);
    for (char c : word) {
      if (!((c >= 'A' && c <= 'Z') || c == '_')) return false;
    }
    pos_ = end + 2;
    return true;
  }

  // Balanced scan of {{ ... }} collecting top-level parameters. Nested
  // templates and links are recorded recursively and contribute their raw
  // source to the enclosing parameter.
  void parse_template() {
    size_t start = pos_;
    pos_ += 2;
    std::string name;
    std::vector<std::string> params;
    std::string current;
    bool in_name = true;
    int link_depth = 0;
    while (pos_ < text_.size()) {
      if (lookahead("{{")) {
        size_t nested_start = pos_;
        parse_nested_template_quiet();
        current.append(text_.substr(nested_start, pos_ - nested_start));
        continue;
      }
      if (lookahead("[[")) {
        ++link_depth;
        current += "[[";
        pos_ += 2;
        continue;
      }
      if (lookahead("]]") && link_depth > 0) {
        --link_depth;
        current += "]]";
        pos_ += 2;
        continue;
      }
      if (lookahead("}}")) {
        pos_ += 2;
        if (in_name) {
          name = current;
        } else {
          params.push_back(current);
        }
        record_template(name, params);
        return;
      }
      if (text_[pos_] == '|' && link_depth == 0) {
        if (in_name) {
          name = current;
          in_name = false;
        } else {
          params.push_back(current);
        }
        current.clear();
        ++pos_;
        continue;
      }
      current.push_back(text_[pos_]);
      ++pos_;
    }
    // No closing braces: treat the opener as literal text.
    ++out_.malformed_constructs;
    pos_ = start + 2;
    block_ += "{{";
  }

  // Nested invocation inside another template: record elements but leave
  // the source untouched for the parent's parameter capture.
  void parse_nested_template_quiet() {
    size_t start = pos_;
    pos_ += 2;
    int depth = 1;
    size_t inner_start = pos_;
    while (pos_ < text_.size() && depth > 0) {
      if (lookahead("{{")) {
        depth += 1;
        pos_ += 2;
        continue;
      }
      if (lookahead("}}")) {
        depth -= 1;
        pos_ += 2;
        continue;
      }
      ++pos_;
    }
    if (depth != 0) {
      ++out_.malformed_constructs;
      pos_ = start + 2;
      return;
    }
    std::string_view body = text_.substr(inner_start, pos_ - 2 - inner_start);
    size_t bar = body.find('|');
    std::string name(bar == std::string_view::npos ? body : body.substr(0, bar));
    std::vector<std::string> params;
    if (bar != std::string_view::npos) {
      for (auto& p : split(body.substr(bar + 1), '|')) params.push_back(p);
    }
    record_template(name, params);
  }

  void record_template(const std::string& raw_name,
                       const std::vector<std::string>& params) {
    std::string name = normalize_template_name(raw_name);
    if (name.empty() || name.front() == '#') return;  // parser functions
    out_.templates.insert(name);
    std::vector<std::string> cleaned;
    for (const auto& p : params) {
      std::string v = collapse_whitespace(p);
      if (!v.empty()) cleaned.push_back(v);
    }
    if (!cleaned.empty()) {
      std::string tag = name;
      for (const auto& p : cleaned) {
        tag.push_back('|');
        tag += p;
      }
      out_.tags.insert(tag);
    }
    std::string lower = fold_lower_utf8(name);
    if (lower.rfind("cite", 0) == 0 || lower == "citation" ||
        lower.rfind("источник", 0) == 0) {
      for (const auto& p : params) {
        extract_urls(p, &out_.references, &seen_urls_);
      }
    }
  }

  void parse_link() {
    size_t start = pos_;
    pos_ += 2;
    size_t body_start = pos_;
    int depth = 1;
    while (pos_ < text_.size() && depth > 0) {
      if (lookahead("[[")) {
        depth += 1;
        pos_ += 2;
        continue;
      }
      if (lookahead("]]")) {
        depth -= 1;
        pos_ += 2;
        continue;
      }
      if (text_[pos_] == '\n' && depth == 1) break;  // links do not span lines
      ++pos_;
    }
    if (depth != 0) {
      ++out_.malformed_constructs;
      pos_ = start + 2;
      block_ += "[[";
      return;
    }
    std::string_view body = text_.substr(body_start, pos_ - 2 - body_start);

    // Split at top-level pipes only.
    std::vector<std::string> parts;
    {
      std::string current;
      int d = 0;
      for (size_t i = 0; i < body.size(); ++i) {
        if (body.substr(i, 2) == "[[") d += 1;
        if (body.substr(i, 2) == "]]" && d > 0) d -= 1;
        if (body[i] == '|' && d == 0) {
          parts.push_back(current);
          current.clear();
        } else {
          current.push_back(body[i]);
        }
      }
      parts.push_back(current);
    }
    std::string target = trim(parts[0]);
    std::string target_nocolon =
        target.empty() ? target
                       : (target.front() == ':' ? target.substr(1) : target);

    for (auto prefix : kCategoryPrefixes) {
      if (has_prefix_ci(target_nocolon, prefix)) {
        std::string cat = normalize_title(target_nocolon.substr(prefix.size()));
        if (!cat.empty()) out_.categories.insert(cat);
        return;
      }
    }
    for (auto prefix : kMediaPrefixes) {
      if (has_prefix_ci(target_nocolon, prefix)) {
        std::string file = normalize_title(target_nocolon.substr(prefix.size()));
        if (!file.empty()) out_.media.insert(file);
        return;  // caption dropped with the media link
      }
    }
    // Plain wikilink: the label (or the target) is prose.
    std::string label = parts.size() > 1 ? parts.back() : target;
    std::string cleaned;
    for (size_t i = 0; i < label.size();) {
      if (label[i] == '\'' && i + 1 < label.size() && label[i + 1] == '\'') {
        while (i < label.size() && label[i] == '\'') ++i;
        continue;
      }
      cleaned.push_back(label[i]);
      ++i;
    }
    block_ += cleaned;
  }

  void parse_external_link() {
    size_t close = text_.find(']', pos_);
    size_t eol = text_.find('\n', pos_);
    if (close == std::string_view::npos ||
        (eol != std::string_view::npos && eol < close)) {
      ++out_.malformed_constructs;
      block_.push_back('[');
      ++pos_;
      return;
    }
    std::string_view body = text_.substr(pos_ + 1, close - pos_ - 1);
    size_t space = body.find(' ');
    if (space != std::string_view::npos) {
      block_ += std::string(body.substr(space + 1));
    }
    pos_ = close + 1;
  }

  void parse_ref() {
    size_t start = pos_;
    size_t gt = text_.find('>', pos_);
    if (gt == std::string_view::npos) {
      ++out_.malformed_constructs;
      block_.push_back('<');
      ++pos_;
      return;
    }
    if (text_[gt - 1] == '/') {  // <ref name=... />
      pos_ = gt + 1;
      return;
    }
    // Case-insensitive search for the closing tag.
    size_t close = std::string_view::npos;
    for (size_t i = gt + 1; i + 6 <= text_.size(); ++i) {
      if (starts_with_ci(text_.substr(i, 6), "</ref>")) {
        close = i;
        break;
      }
    }
    if (close == std::string_view::npos) {
      ++out_.malformed_constructs;
      pos_ = start + 4;
      return;
    }
    std::string_view content = text_.substr(gt + 1, close - gt - 1);
    extract_urls(content, &out_.references, &seen_urls_);
    // Cite templates inside the ref still need their names recorded.
    size_t tpl = content.find("{{");
    while (tpl != std::string_view::npos) {
      size_t tend = content.find("}}", tpl + 2);
      if (tend == std::string_view::npos) break;
      std::string_view body = content.substr(tpl + 2, tend - tpl - 2);
      size_t bar = body.find('|');
      std::string name(bar == std::string_view::npos ? body
                                                     : body.substr(0, bar));
      std::vector<std::string> params;
      if (bar != std::string_view::npos) {
        for (auto& p : split(body.substr(bar + 1), '|')) params.push_back(p);
      }
      record_template(name, params);
      tpl = content.find("{{", tend + 2);
    }
    pos_ = close + 6;
  }

  void parse_html_tag() {
    size_t gt = text_.find('>', pos_);
    size_t eol = text_.find('\n', pos_);
    if (gt == std::string_view::npos ||
        (eol != std::string_view::npos && eol < gt)) {
      block_.push_back('<');
      ++pos_;
      return;
    }
    std::string_view tag = text_.substr(pos_ + 1, gt - pos_ - 1);
    bool closing = !tag.empty() && tag.front() == '/';
    if (closing) tag = tag.substr(1);
    size_t name_end = 0;
    while (name_end < tag.size() &&
           ((tag[name_end] >= 'a' && tag[name_end] <= 'z') ||
            (tag[name_end] >= 'A' && tag[name_end] <= 'Z') ||
            (tag[name_end] >= '0' && tag[name_end] <= '9'))) {
      ++name_end;
    }
    std::string name = to_lower_ascii(tag.substr(0, name_end));
    if (name == "br") {
      block_.push_back(' ');
      pos_ = gt + 1;
      return;
    }
    if (!closing && opaque_tags().count(name) > 0 && tag.back() != '/') {
      std::string close_tag = "</" + name + ">";
      size_t close = std::string_view::npos;
      for (size_t i = gt + 1; i + close_tag.size() <= text_.size(); ++i) {
        if (starts_with_ci(text_.substr(i, close_tag.size()), close_tag)) {
          close = i;
          break;
        }
      }
      if (close == std::string_view::npos) {
        ++out_.malformed_constructs;
        pos_ = text_.size();
        return;
      }
      pos_ = close + close_tag.size();
      return;
    }
    // Unknown or formatting tag: drop the tag, keep surrounding prose.
    pos_ = gt + 1;
  }
};

}  // namespace

WikitextElements parse_wikitext(std::string_view text) {
  std::string normalized = nfc_utf8(text);
  Parser parser(normalized);
  return parser.run();
}

}  // namespace forkdiff
