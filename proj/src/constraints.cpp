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

#include "advtext/constraints.hpp"

#include <algorithm>
#include <cstdio>

#include "advtext/errors.hpp"
#include "advtext/grammar.hpp"

namespace advtext {

namespace {

ConstraintVerdict pass(const std::string& id, std::optional<double> score = std::nullopt) {
  return {true, id, score, ""};
}

ConstraintVerdict fail(const std::string& id, std::string detail,
                       std::optional<double> score = std::nullopt) {
  return {false, id, score, std::move(detail)};
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

}  // namespace

ConstraintVerdict SwapConstraint::check(const TokenizedText& x, const TokenizedText& x_adv,
                                        std::span<const SwapRecord> swaps) const {
  (void)x_adv;
  for (const SwapRecord& s : swaps) {
    ConstraintVerdict v = check_swap(x, s);
    if (!v.passed) return v;
  }
  return pass(id());
}

WordEmbeddingDistance::WordEmbeddingDistance(std::shared_ptr<const EmbeddingStore> store,
                                             double min_cos)
    : store_(std::move(store)), min_cos_(min_cos) {
  if (!store_) throw ConfigError("word_embedding constraint requires an embedding store");
}

ConstraintVerdict WordEmbeddingDistance::check_swap(const TokenizedText& x,
                                                    const SwapRecord& swap) const {
  (void)x;
  auto u = store_->find(swap.original_word);
  auto v = store_->find(swap.replacement_word);
  if (u.empty() || v.empty()) {
    return fail(id(), "out-of-vocabulary word in swap '" + swap.original_word + "' -> '" +
                          swap.replacement_word + "'");
  }
  double c = cosine(u, v);
  if (c >= min_cos_) return pass(id(), c);
  return fail(id(),
              "cos('" + swap.original_word + "', '" + swap.replacement_word + "') = " + fmt(c) +
                  " < " + fmt(min_cos_),
              c);
}

PartOfSpeechConsistency::PartOfSpeechConsistency(std::shared_ptr<const PosLexicon> lexicon)
    : lexicon_(std::move(lexicon)) {
  if (!lexicon_) throw ConfigError("part_of_speech constraint requires a lexicon");
}

ConstraintVerdict PartOfSpeechConsistency::check_swap(const TokenizedText& x,
                                                      const SwapRecord& swap) const {
  (void)x;
  PosTag a = lexicon_->tag_word(swap.original_word);
  PosTag b = lexicon_->tag_word(swap.replacement_word);
  if (family(a) == family(b)) return pass(id());
  return fail(id(), "'" + swap.original_word + "' is " + std::string(tag_name(a)) + ", '" +
                        swap.replacement_word + "' is " + std::string(tag_name(b)));
}

const std::unordered_set<std::string>& default_stopwords() {
  static const std::unordered_set<std::string> words = {
      "a", "about", "above", "after", "again", "against", "all", "am", "an", "and", "any",
      "are", "aren't", "as", "at", "be", "because", "been", "before", "being", "below",
      "between", "both", "but", "by", "can", "can't", "cannot", "could", "couldn't", "did",
      "didn't", "do", "does", "doesn't", "doing", "don't", "down", "during", "each", "few",
      "for", "from", "further", "had", "hadn't", "has", "hasn't", "have", "haven't", "having",
      "he", "her", "here", "hers", "herself", "him", "himself", "his", "how", "i", "if", "in",
      "into", "is", "isn't", "it", "it's", "its", "itself", "just", "me", "might", "more",
      "most", "must", "mustn't", "my", "myself", "no", "nor", "not", "now", "of", "off", "on",
      "once", "only", "or", "other", "our", "ours", "ourselves", "out", "over", "own", "same",
      "shall", "she", "should", "shouldn't", "so", "some", "such", "than", "that", "the",
      "their", "theirs", "them", "themselves", "then", "there", "these", "they", "this",
      "those", "through", "to", "too", "under", "until", "up", "us", "very", "was", "wasn't",
      "we", "were", "weren't", "what", "when", "where", "which", "while", "who", "whom", "why",
      "will", "with", "won't", "would", "wouldn't", "yet", "you", "your", "yours", "yourself",
      "yourselves", "thee", "thou", "may", "also", "ever", "even", "still", "every", "another",
      ",", ".", "!", "?", ";", ":", "--", "'s", "(", ")", "\"",
  };
  return words;
}

bool is_stopword(std::string_view word) {
  return default_stopwords().contains(std::string(word));
}

ConstraintVerdict StopwordModification::check_swap(const TokenizedText& x,
                                                   const SwapRecord& swap) const {
  (void)x;
  if (is_stopword(swap.original_word)) {
    return fail(id(), "stopword '" + swap.original_word + "' may not be replaced");
  }
  return pass(id());
}

SentenceEncoderSimilarity::SentenceEncoderSimilarity(std::shared_ptr<const SentenceEncoder> encoder,
                                                     double min_sim,
                                                     std::optional<std::size_t> window_radius,
                                                     CompareAgainst against)
    : encoder_(std::move(encoder)),
      min_sim_(min_sim),
      window_radius_(window_radius),
      against_(against) {
  if (!encoder_) throw ConfigError("sentence_encoder constraint requires an encoder");
}

ConstraintParams SentenceEncoderSimilarity::params() const {
  ConstraintParams p = {{"min_sim", min_sim_}};
  if (window_radius_) p.emplace_back("window_radius", static_cast<double>(*window_radius_));
  return p;
}

ConstraintVerdict SentenceEncoderSimilarity::check(const TokenizedText& x,
                                                   const TokenizedText& x_adv,
                                                   std::span<const SwapRecord> swaps) const {
  (void)swaps;
  double sim = window_radius_ ? windowed_sentence_similarity(*encoder_, x, x_adv, *window_radius_)
                              : sentence_similarity(*encoder_, x, x_adv);
  if (x == x_adv || sim >= min_sim_) return pass(id(), sim);
  return fail(id(), "sentence similarity " + fmt(sim) + " < " + fmt(min_sim_), sim);
}

GrammarErrorBound::GrammarErrorBound(std::shared_ptr<const PosLexicon> lexicon, int max_delta)
    : lexicon_(std::move(lexicon)), max_delta_(max_delta) {
  if (!lexicon_) throw ConfigError("grammar constraint requires a lexicon");
}

ConstraintVerdict GrammarErrorBound::check(const TokenizedText& x, const TokenizedText& x_adv,
                                           std::span<const SwapRecord> swaps) const {
  (void)swaps;
  int delta = grammar_error_delta(*lexicon_, x, x_adv);
  if (delta <= max_delta_) return pass(id(), delta);
  return fail(id(), "perturbation introduces " + std::to_string(delta) + " grammar error(s)",
              delta);
}

ConstraintVerdict MaxWordsPerturbed::check(const TokenizedText& x, const TokenizedText& x_adv,
                                           std::span<const SwapRecord> swaps) const {
  (void)swaps;
  std::size_t n = word_diff(x, x_adv).indices.size();
  if (n <= max_words_) return pass(id(), static_cast<double>(n));
  return fail(id(), std::to_string(n) + " words perturbed > " + std::to_string(max_words_),
              static_cast<double>(n));
}

ConstraintVerdict EditDistanceLimit::check(const TokenizedText& x, const TokenizedText& x_adv,
                                           std::span<const SwapRecord> swaps) const {
  (void)swaps;
  std::size_t d = levenshtein(x.text(), x_adv.text());
  if (d <= max_distance_) return pass(id(), static_cast<double>(d));
  return fail(id(), "edit distance " + std::to_string(d) + " > " + std::to_string(max_distance_),
              static_cast<double>(d));
}

ConstraintSet ConstraintSet::without(std::size_t index) const {
  if (index >= constraints_.size()) throw IndexError("ConstraintSet::without: index out of range");
  auto rest = constraints_;
  rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(index));
  return ConstraintSet(name_ + "-" + constraints_[index]->id(), std::move(rest));
}

std::optional<double> ConstraintSet::min_word_cosine() const {
  std::optional<double> out;
  for (const auto& c : constraints_) {
    if (auto* w = dynamic_cast<const WordEmbeddingDistance*>(c.get())) {
      out = out ? std::max(*out, w->min_cos()) : w->min_cos();
    }
  }
  return out;
}

bool ConstraintSet::allows_swap(const TokenizedText& x, const SwapRecord& swap) const {
  for (const auto& c : constraints_) {
    if (!c->is_swap_constraint()) continue;
    if (!static_cast<const SwapConstraint&>(*c).check_swap(x, swap).passed) return false;
  }
  return true;
}

bool ConstraintSet::allows_text(const TokenizedText& x, const TokenizedText& previous,
                                const TokenizedText& x_adv) const {
  std::optional<std::vector<SwapRecord>> from_x;
  for (const auto& c : constraints_) {
    if (c->is_swap_constraint()) continue;
    if (c->compares_against() == CompareAgainst::kOriginal) {
      if (!from_x) from_x = swaps_between(x, x_adv);
      if (!c->check(x, x_adv, *from_x).passed) return false;
    } else {
      auto from_prev = swaps_between(previous, x_adv);
      if (!c->check(previous, x_adv, from_prev).passed) return false;
    }
  }
  return true;
}

std::vector<ConstraintVerdict> ConstraintSet::check_all(const TokenizedText& x,
                                                        const TokenizedText& x_adv) const {
  auto swaps = swaps_between(x, x_adv);
  std::vector<ConstraintVerdict> out;
  out.reserve(constraints_.size());
  for (const auto& c : constraints_) out.push_back(c->check(x, x_adv, swaps));
  return out;
}

ConstraintSet loose_preset(const LanguageResources& res) {
  return ConstraintSet(
      "loose", {std::make_shared<WordEmbeddingDistance>(res.store, kLooseWordCosine),
                std::make_shared<PartOfSpeechConsistency>(res.lexicon),
                std::make_shared<StopwordModification>()});
}

ConstraintSet strict_preset(const LanguageResources& res) {
  return ConstraintSet(
      "strict",
      {std::make_shared<WordEmbeddingDistance>(res.store, kStrictWordCosine),
       std::make_shared<SentenceEncoderSimilarity>(res.encoder, kStrictSentenceSimilarity),
       std::make_shared<GrammarErrorBound>(res.lexicon, 0),
       std::make_shared<PartOfSpeechConsistency>(res.lexicon),
       std::make_shared<StopwordModification>()});
}

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = {"loose", "strict"};
  return names;
}

ConstraintSet make_preset(const std::string& name, const LanguageResources& res) {
  if (name == "loose") return loose_preset(res);
  if (name == "strict") return strict_preset(res);
  throw ConfigError("unknown preset '" + name + "'; valid presets: loose, strict");
}

}  // namespace advtext
