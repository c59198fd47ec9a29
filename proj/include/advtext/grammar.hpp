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

// Rule-based grammar checker over the tag sequence.
//
// Seven rules, named after the LanguageTool rule IDs they imitate:
//
//   A_PLURAL      "a"/"an" directly before NOUN_PLURAL        a grates
//   DID_BASEFORM  MODAL or do-form, optional "not"/ADV, then
//                 VERB_3SG or VERB_PAST                       can't compares
//   NON3PRS_VERB  i/we/you/they, optional ADV, then VERB_3SG   they does
//   TO_NON_BASE   "to" directly before VERB_PAST               to knew
//   PRP_VBG       subject pronoun directly before VERB_GERUND  we wanting
//   PRP_MD_NN     PRONOUN MODAL then ADJ or NOUN               we can appreciative
//   PRP_VB        it/he/she/they directly before NOUN, with no
//                 verb among the two preceding tokens          it game
//
// The reported span covers the offending word.

#ifndef ADVTEXT_GRAMMAR_HPP_
#define ADVTEXT_GRAMMAR_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "advtext/pos.hpp"
#include "advtext/text.hpp"

namespace advtext {

struct RuleMatch {
  std::string rule_id;
  std::size_t begin = 0;  // token range [begin, end)
  std::size_t end = 0;
  std::string message;

  bool operator==(const RuleMatch&) const = default;
};

const std::vector<std::string>& grammar_rule_ids();

std::vector<RuleMatch> check_grammar(const PosLexicon& lexicon, const TokenizedText& x);
std::vector<RuleMatch> check_grammar(const PosLexicon& lexicon,
                                     std::span<const std::string> tokens);

// |errors(x_adv)| - |errors(x)|.
int grammar_error_delta(const PosLexicon& lexicon, const TokenizedText& x,
                        const TokenizedText& x_adv);

}  // namespace advtext

#endif  // ADVTEXT_GRAMMAR_HPP_
