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

// Lexicon-driven part-of-speech tagging.
//
// Every token gets exactly one tag:
//   1. built-in closed classes (pronouns, modals, determiners) win outright;
//   2. otherwise the lexicon's tag set is reduced to one tag by priority
//      PRONOUN > MODAL > DET > PREP > VERB_3SG > VERB_PAST > VERB_GERUND >
//      VERB_BASE > NOUN_PLURAL > NOUN > ADJ > ADV > OTHER;
//   3. unknown words fall back to suffix rules: "'s" -> NOUN (possessive),
//      "-ing" -> VERB_GERUND, "-ed" -> VERB_PAST, "-s" -> NOUN_PLURAL when a
//      stem is a known noun or unknown, VERB_3SG when a stem is only a verb;
//   4. anything else is OTHER.

#ifndef ADVTEXT_POS_HPP_
#define ADVTEXT_POS_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "advtext/text.hpp"

namespace advtext {

enum class PosTag : std::uint8_t {
  kNoun,
  kNounPlural,
  kVerbBase,
  kVerb3sg,
  kVerbPast,
  kVerbGerund,
  kAdj,
  kAdv,
  kPronoun,
  kModal,
  kDet,
  kPrep,
  kOther,
};

inline constexpr std::size_t kPosTagCount = 13;

// Universal-style families used by the part-of-speech consistency check.
enum class PosFamily : std::uint8_t { kNoun, kVerb, kAdj, kAdv, kFunction, kOther };

std::string_view tag_name(PosTag tag);
std::optional<PosTag> parse_tag(std::string_view name);
PosFamily family(PosTag tag);
bool is_verb(PosTag tag);

// Bit set over PosTag.
class TagSet {
 public:
  TagSet() = default;
  void add(PosTag t) { bits_ |= static_cast<std::uint16_t>(1u << static_cast<unsigned>(t)); }
  bool has(PosTag t) const { return (bits_ >> static_cast<unsigned>(t)) & 1u; }
  bool empty() const { return bits_ == 0; }
  bool operator==(const TagSet&) const = default;

 private:
  std::uint16_t bits_ = 0;
};

class PosLexicon {
 public:
  // Closed classes only.
  PosLexicon() = default;

  // "word<TAB>TAG1,TAG2" lines; '#' comments and blank lines ignored.
  // Throws FormatError with the line number on a malformed row or unknown tag.
  static PosLexicon parse(std::string_view content);
  static PosLexicon load(const std::filesystem::path& path);

  // Entries for closed-class words are ignored.
  void add(std::string_view word, TagSet tags);

  std::size_t size() const { return entries_.size(); }
  // Closed class or lexicon entry; nullopt when unknown.
  std::optional<TagSet> lookup(std::string_view word) const;
  PosTag tag_word(std::string_view word) const;

  static bool is_closed_class(std::string_view word);

 private:
  std::unordered_map<std::string, TagSet> entries_;
};

std::vector<PosTag> tag(const PosLexicon& lexicon, const TokenizedText& x);
std::vector<PosTag> tag(const PosLexicon& lexicon, std::span<const std::string> tokens);

}  // namespace advtext

#endif  // ADVTEXT_POS_HPP_
