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

#include "forkdiff/analytics/entities.hpp"

#include <httplib.h>

#include <algorithm>

#include "forkdiff/util/error.hpp"
#include "forkdiff/util/fsio.hpp"
#include "forkdiff/util/strings.hpp"

namespace forkdiff {

std::string to_string(EntityLabel label) {
  switch (label) {
    case EntityLabel::kLoc:
      return "LOC";
    case EntityLabel::kOrg:
      return "ORG";
    case EntityLabel::kPer:
      return "PER";
    case EntityLabel::kMisc:
      return "MISC";
  }
  return "MISC";
}

EntityLabel entity_label_from_string(const std::string& s) {
  if (s == "LOC") return EntityLabel::kLoc;
  if (s == "ORG") return EntityLabel::kOrg;
  if (s == "PER" || s == "PERSON") return EntityLabel::kPer;
  if (s == "MISC") return EntityLabel::kMisc;
  throw DataError("unknown entity label: " + s);
}

namespace {

struct Token {
  std::string text;   // original form
  std::string lower;  // fold_lower form, lookup key
  bool capitalized = false;
};

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> tokens;
  auto cps = utf8_decode(text);
  size_t i = 0;
  while (i < cps.size()) {
    if (!is_letter(cps[i]) && !is_digit(cps[i])) {
      ++i;
      continue;
    }
    Token token;
    token.capitalized = is_upper_letter(cps[i]);
    while (i < cps.size() && (is_letter(cps[i]) || is_digit(cps[i]) ||
                              cps[i] == U'-' || cps[i] == 0x2019)) {
      utf8_append(&token.text, cps[i]);
      utf8_append(&token.lower, fold_lower(cps[i]));
      ++i;
    }
    tokens.push_back(std::move(token));
  }
  return tokens;
}

}  // namespace

GazetteerRecognizer GazetteerRecognizer::from_tsv(const std::string& path) {
  GazetteerRecognizer recognizer;
  int line_no = 0;
  for_each_line(path, [&](const std::string& line) {
    ++line_no;
    if (line.empty() || line.front() == '#') return;
    auto cols = split(line, '\t');
    if (cols.size() != 3) {
      throw DataError("gazetteer TSV line " + std::to_string(line_no) +
                      ": expected surface<TAB>lemma<TAB>label");
    }
    recognizer.add(trim(cols[0]), trim(cols[1]),
                   entity_label_from_string(trim(cols[2])));
  });
  return recognizer;
}

void GazetteerRecognizer::add(const std::string& surface,
                              const std::string& lemma, EntityLabel label) {
  if (surface.empty() || lemma.empty()) {
    throw ValidationError("gazetteer entries need a surface and a lemma");
  }
  std::vector<std::string> key;
  for (const auto& token : tokenize(surface)) key.push_back(token.lower);
  if (key.empty()) return;
  max_entry_tokens_ = std::max(max_entry_tokens_, key.size());
  entries_[key] = GazetteerEntry{lemma, label};
}

std::vector<NamedEntity> GazetteerRecognizer::recognize(
    const std::string& text) const {
  std::vector<NamedEntity> entities;
  const std::vector<Token> tokens = tokenize(text);
  size_t i = 0;
  while (i < tokens.size()) {
    // Longest gazetteer match starting at i.
    size_t longest = 0;
    const GazetteerEntry* hit = nullptr;
    size_t max_len = std::min(max_entry_tokens_, tokens.size() - i);
    std::vector<std::string> key;
    for (size_t len = 1; len <= max_len; ++len) {
      key.push_back(tokens[i + len - 1].lower);
      auto it = entries_.find(key);
      if (it != entries_.end()) {
        longest = len;
        hit = &it->second;
      }
    }
    if (hit != nullptr) {
      NamedEntity entity;
      entity.label = hit->label;
      entity.lemma = hit->lemma;
      for (size_t t = 0; t < longest; ++t) {
        if (t > 0) entity.surface.push_back(' ');
        entity.surface += tokens[i + t].text;
      }
      entities.push_back(std::move(entity));
      i += longest;
      continue;
    }
    if (tokens[i].capitalized && utf8_decode(tokens[i].text).size() >= 2) {
      entities.push_back(
          NamedEntity{tokens[i].text, EntityLabel::kMisc, tokens[i].text});
    }
    ++i;
  }
  return entities;
}

HttpRecognizer::HttpRecognizer(std::string base_url, std::string path)
    : base_url_(std::move(base_url)), path_(std::move(path)) {}

std::vector<NamedEntity> HttpRecognizer::recognize(
    const std::string& text) const {
  httplib::Client client(base_url_);
  client.set_read_timeout(60, 0);
  nlohmann::json request{{"text", text}};
  auto res = client.Post(path_, request.dump(), "application/json");
  if (!res || res->status != 200) {
    throw TransportError("entity recognizer request failed: " + base_url_);
  }
  std::vector<NamedEntity> entities;
  for (const auto& item : nlohmann::json::parse(res->body)) {
    NamedEntity entity;
    entity.surface = item.at("surface").get<std::string>();
    entity.label = entity_label_from_string(item.at("label").get<std::string>());
    entity.lemma = item.at("lemma").get<std::string>();
    if (entity.lemma.empty()) {
      throw DataError("entity recognizer returned an empty lemma");
    }
    entities.push_back(std::move(entity));
  }
  return entities;
}

EntityDeltas entity_deltas(const std::vector<ContentDiff>& diffs,
                           const EntityRecognizer& recognizer, int k) {
  if (k < 1) throw ValidationError("entity_deltas: k must be >= 1");

  struct LemmaKey {
    std::string lemma;
    EntityLabel label;
    bool operator<(const LemmaKey& other) const {
      if (lemma != other.lemma) return lemma < other.lemma;
      return static_cast<int>(label) < static_cast<int>(other.label);
    }
  };
  std::map<LemmaKey, int64_t> added_counts;
  std::map<LemmaKey, int64_t> deleted_counts;
  EntityDeltas deltas;

  for (const auto& diff : diffs) {
    if (!diff.has_text_change()) continue;
    ++deltas.pages_with_text_changes;

    std::string deleted_text;
    for (const auto& s : diff.deleted) deleted_text += s + "\n";
    for (const auto& pair : diff.changed) deleted_text += pair.old_sentence + "\n";
    std::string added_text;
    for (const auto& s : diff.inserted) added_text += s + "\n";
    for (const auto& pair : diff.changed) added_text += pair.new_sentence + "\n";

    try {
      std::set<LemmaKey> page_deleted;
      for (const auto& entity : recognizer.recognize(deleted_text)) {
        page_deleted.insert(LemmaKey{entity.lemma, entity.label});
      }
      std::set<LemmaKey> page_added;
      for (const auto& entity : recognizer.recognize(added_text)) {
        page_added.insert(LemmaKey{entity.lemma, entity.label});
      }
      for (const auto& key : page_deleted) ++deleted_counts[key];
      for (const auto& key : page_added) ++added_counts[key];
    } catch (const Error&) {
      ++deltas.pages_skipped;
    }
  }

  auto rank = [&](const std::map<LemmaKey, int64_t>& counts) {
    std::vector<EntityCount> ranked;
    for (const auto& [key, count] : counts) {
      EntityCount ec;
      ec.lemma = key.lemma;
      ec.label = key.label;
      ec.count = count;
      ec.pct = deltas.pages_with_text_changes > 0
                   ? 100.0 * static_cast<double>(count) /
                         deltas.pages_with_text_changes
                   : 0.0;
      ranked.push_back(std::move(ec));
    }
    std::sort(ranked.begin(), ranked.end(),
              [](const EntityCount& a, const EntityCount& b) {
                if (a.count != b.count) return a.count > b.count;
                return a.lemma < b.lemma;
              });
    if (static_cast<int>(ranked.size()) > k) ranked.resize(k);
    return ranked;
  };
  deltas.added = rank(added_counts);
  deltas.deleted = rank(deleted_counts);
  return deltas;
}

}  // namespace forkdiff
