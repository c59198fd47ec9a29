// Copyright 2026 The advtext Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "advtext/pos.hpp"

#include <array>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "advtext/errors.hpp"

namespace advtext {

namespace {

constexpr std::array<std::string_view, kPosTagCount> kNames = {
    "NOUN", "NOUN_PLURAL", "VERB_BASE", "VERB_3SG", "VERB_PAST", "VERB_GERUND", "ADJ",
    "ADV",  "PRONOUN",     "MODAL",     "DET",      "PREP",      "OTHER"};

constexpr std::array<PosTag, kPosTagCount> kPriority = {
    PosTag::kPronoun,    PosTag::kModal,    PosTag::kDet,        PosTag::kPrep,
    PosTag::kVerb3sg,    PosTag::kVerbPast, PosTag::kVerbGerund, PosTag::kVerbBase,
    PosTag::kNounPlural, PosTag::kNoun,     PosTag::kAdj,        PosTag::kAdv,
    PosTag::kOther};

const std::unordered_map<std::string_view, PosTag>& closed_class() {
  static const auto* table = [] {
    auto* t = new std::unordered_map<std::string_view, PosTag>();
    for (std::string_view w : {"i", "me", "you", "he", "him", "she", "her", "it", "we", "us",
                               "they", "them", "thee", "thou", "myself", "yourself", "himself",
                               "herself", "itself", "ourselves", "themselves"}) {
      t->emplace(w, PosTag::kPronoun);
    }
    for (std::string_view w : {"can", "could", "may", "might", "must", "shall", "should", "will",
                               "would", "can't", "cannot", "couldn't", "won't", "wouldn't",
                               "shouldn't", "mustn't", "mightn't"}) {
      t->emplace(w, PosTag::kModal);
    }
    for (std::string_view w : {"a", "an", "the", "this", "that", "these", "those", "my", "your",
                               "his", "its", "our", "their", "some", "any", "every", "each",
                               "no", "another"}) {
      t->emplace(w, PosTag::kDet);
    }
    return t;
  }();
  return *table;
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

PosTag by_priority(TagSet tags) {
  for (PosTag t : kPriority) {
    if (tags.has(t)) return t;
  }
  return PosTag::kOther;
}

}  // namespace

std::string_view tag_name(PosTag tag) { return kNames[static_cast<std::size_t>(tag)]; }

std::optional<PosTag> parse_tag(std::string_view name) {
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == name) return static_cast<PosTag>(i);
  }
  return std::nullopt;
}

PosFamily family(PosTag tag) {
  switch (tag) {
    case PosTag::kNoun:
    case PosTag::kNounPlural:
      return PosFamily::kNoun;
    case PosTag::kVerbBase:
    case PosTag::kVerb3sg:
    case PosTag::kVerbPast:
    case PosTag::kVerbGerund:
      return PosFamily::kVerb;
    case PosTag::kAdj:
      return PosFamily::kAdj;
    case PosTag::kAdv:
      return PosFamily::kAdv;
    case PosTag::kPronoun:
    case PosTag::kModal:
    case PosTag::kDet:
    case PosTag::kPrep:
      return PosFamily::kFunction;
    case PosTag::kOther:
      break;
  }
  return PosFamily::kOther;
}

bool is_verb(PosTag tag) { return family(tag) == PosFamily::kVerb; }

bool PosLexicon::is_closed_class(std::string_view word) { return closed_class().contains(word); }

void PosLexicon::add(std::string_view word, TagSet tags) {
  if (tags.empty() || is_closed_class(word)) return;
  entries_[std::string(word)] = tags;
}

PosLexicon PosLexicon::parse(std::string_view content) {
  PosLexicon lex;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < content.size()) {
    std::size_t end = content.find('\n', pos);
    if (end == std::string_view::npos) end = content.size();
    std::string_view line = content.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    std::size_t tab = line.find('\t');
    if (tab == std::string_view::npos || tab == 0 || tab + 1 >= line.size()) {
      throw FormatError("lexicon row must be 'word<TAB>TAG1,TAG2'", line_no);
    }
    std::string_view word = line.substr(0, tab);
    std::string_view tags = line.substr(tab + 1);
    TagSet set;
    std::size_t p = 0;
    while (p <= tags.size()) {
      std::size_t comma = tags.find(',', p);
      if (comma == std::string_view::npos) comma = tags.size();
      std::string_view name = tags.substr(p, comma - p);
      auto t = parse_tag(name);
      if (!t) throw FormatError("unknown tag '" + std::string(name) + "'", line_no);
      set.add(*t);
      p = comma + 1;
    }
    lex.add(word, set);
  }
  return lex;
}

PosLexicon PosLexicon::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open lexicon " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

std::optional<TagSet> PosLexicon::lookup(std::string_view word) const {
  const auto& cc = closed_class();
  if (auto it = cc.find(word); it != cc.end()) {
    TagSet s;
    s.add(it->second);
    return s;
  }
  if (auto it = entries_.find(std::string(word)); it != entries_.end()) return it->second;
  return std::nullopt;
}

PosTag PosLexicon::tag_word(std::string_view word) const {
  if (auto tags = lookup(word)) return by_priority(*tags);

  if (ends_with(word, "'s")) return PosTag::kNoun;
  if (word.size() > 4 && ends_with(word, "ing")) return PosTag::kVerbGerund;
  if (word.size() > 3 && ends_with(word, "ed")) return PosTag::kVerbPast;
  if (word.size() > 2 && ends_with(word, "s") && !ends_with(word, "ss") &&
      !ends_with(word, "us") && !ends_with(word, "is")) {
    std::vector<std::string> stems;
    stems.emplace_back(word.substr(0, word.size() - 1));
    if (ends_with(word, "es")) stems.emplace_back(word.substr(0, word.size() - 2));
    if (ends_with(word, "ies")) stems.push_back(std::string(word.substr(0, word.size() - 3)) + "y");
    bool noun_stem = false;
    bool verb_stem = false;
    for (const auto& stem : stems) {
      auto tags = lookup(stem);
      if (!tags) continue;
      noun_stem = noun_stem || tags->has(PosTag::kNoun);
      verb_stem = verb_stem || tags->has(PosTag::kVerbBase);
    }
    if (verb_stem && !noun_stem) return PosTag::kVerb3sg;
    return PosTag::kNounPlural;
  }
  return PosTag::kOther;
}

std::vector<PosTag> tag(const PosLexicon& lexicon, std::span<const std::string> tokens) {
  std::vector<PosTag> out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) out.push_back(lexicon.tag_word(t));
  return out;
}

std::vector<PosTag> tag(const PosLexicon& lexicon, const TokenizedText& x) {
  return tag(lexicon, std::span<const std::string>(x.tokens()));
}

}  // namespace advtext
