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

#include "advtext/grammar.hpp"

#include <algorithm>
#include <string_view>

namespace advtext {

namespace {

bool one_of(std::string_view w, std::initializer_list<std::string_view> set) {
  return std::find(set.begin(), set.end(), w) != set.end();
}

bool is_do_form(std::string_view w) {
  return one_of(w, {"do", "does", "did", "don't", "doesn't", "didn't"});
}

class Matcher {
 public:
  Matcher(std::span<const std::string> tokens, std::vector<PosTag> tags)
      : tokens_(tokens), tags_(std::move(tags)) {}

  std::vector<RuleMatch> run() {
    for (std::size_t i = 0; i < tokens_.size(); ++i) {
      a_plural(i);
      did_baseform(i);
      non3prs_verb(i);
      to_non_base(i);
      prp_vbg(i);
      prp_md_nn(i);
      prp_vb(i);
    }
    return std::move(out_);
  }

 private:
  bool has(std::size_t i) const { return i < tokens_.size(); }
  const std::string& word(std::size_t i) const { return tokens_[i]; }
  PosTag tag_at(std::size_t i) const { return tags_[i]; }

  void emit(const char* id, std::size_t at, std::string message) {
    out_.push_back({id, at, at + 1, std::move(message)});
  }

  void a_plural(std::size_t i) {
    if (!one_of(word(i), {"a", "an"}) || !has(i + 1)) return;
    if (tag_at(i + 1) == PosTag::kNounPlural) {
      emit("A_PLURAL", i + 1, "indefinite article before plural '" + word(i + 1) + "'");
    }
  }

  void did_baseform(std::size_t i) {
    if (tag_at(i) != PosTag::kModal && !is_do_form(word(i))) return;
    std::size_t j = i + 1;
    while (has(j) && (word(j) == "not" || tag_at(j) == PosTag::kAdv)) ++j;
    if (!has(j)) return;
    if (tag_at(j) == PosTag::kVerb3sg || tag_at(j) == PosTag::kVerbPast) {
      emit("DID_BASEFORM", j, "'" + word(i) + "' requires the base form of '" + word(j) + "'");
    }
  }

  void non3prs_verb(std::size_t i) {
    if (!one_of(word(i), {"i", "we", "you", "they"})) return;
    std::size_t j = i + 1;
    if (has(j) && tag_at(j) == PosTag::kAdv) ++j;
    if (has(j) && tag_at(j) == PosTag::kVerb3sg) {
      emit("NON3PRS_VERB", j, "'" + word(i) + "' takes a non-third-person verb, not '" +
                                  word(j) + "'");
    }
  }

  void to_non_base(std::size_t i) {
    if (word(i) != "to" || !has(i + 1)) return;
    if (tag_at(i + 1) == PosTag::kVerbPast) {
      emit("TO_NON_BASE", i + 1, "'to' requires a base-form verb, not '" + word(i + 1) + "'");
    }
  }

  void prp_vbg(std::size_t i) {
    if (!one_of(word(i), {"i", "you", "he", "she", "we", "they"}) || !has(i + 1)) return;
    if (tag_at(i + 1) == PosTag::kVerbGerund) {
      emit("PRP_VBG", i + 1, "'" + word(i) + " " + word(i + 1) + "' is missing an auxiliary");
    }
  }

  void prp_md_nn(std::size_t i) {
    if (tag_at(i) != PosTag::kPronoun || !has(i + 2)) return;
    if (tag_at(i + 1) != PosTag::kModal) return;
    if (tag_at(i + 2) == PosTag::kAdj || tag_at(i + 2) == PosTag::kNoun) {
      emit("PRP_MD_NN", i + 2, "a verb seems to be missing after '" + word(i + 1) + "'");
    }
  }

  void prp_vb(std::size_t i) {
    if (!one_of(word(i), {"it", "he", "she", "they"}) || !has(i + 1)) return;
    if (tag_at(i + 1) != PosTag::kNoun) return;
    for (std::size_t back = 1; back <= 2 && back <= i; ++back) {
      if (is_verb(tag_at(i - back))) return;
    }
    emit("PRP_VB", i + 1, "noun '" + word(i + 1) + "' directly after subject pronoun '" +
                              word(i) + "'");
  }

  std::span<const std::string> tokens_;
  std::vector<PosTag> tags_;
  std::vector<RuleMatch> out_;
};

}  // namespace

const std::vector<std::string>& grammar_rule_ids() {
  static const std::vector<std::string> ids = {"A_PLURAL", "DID_BASEFORM", "NON3PRS_VERB",
                                               "TO_NON_BASE", "PRP_VBG", "PRP_MD_NN", "PRP_VB"};
  return ids;
}

std::vector<RuleMatch> check_grammar(const PosLexicon& lexicon,
                                     std::span<const std::string> tokens) {
  return Matcher(tokens, tag(lexicon, tokens)).run();
}

std::vector<RuleMatch> check_grammar(const PosLexicon& lexicon, const TokenizedText& x) {
  return check_grammar(lexicon, std::span<const std::string>(x.tokens()));
}

int grammar_error_delta(const PosLexicon& lexicon, const TokenizedText& x,
                        const TokenizedText& x_adv) {
  return static_cast<int>(check_grammar(lexicon, x_adv).size()) -
         static_cast<int>(check_grammar(lexicon, x).size());
}

}  // namespace advtext
