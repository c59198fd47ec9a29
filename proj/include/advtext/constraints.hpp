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

// Constraints over (x, x_adv). Swap constraints judge each substituted word
// on its own and are used to filter candidates before a search sees them;
// text constraints look at the whole perturbed text and are applied by the
// searches after each candidate edit.

#ifndef ADVTEXT_CONSTRAINTS_HPP_
#define ADVTEXT_CONSTRAINTS_HPP_

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "advtext/embedding.hpp"
#include "advtext/encoder.hpp"
#include "advtext/pos.hpp"
#include "advtext/text.hpp"

namespace advtext {

enum class CompareAgainst { kOriginal, kPreviousStep };

struct ConstraintVerdict {
  bool passed = true;
  std::string constraint_id;
  std::optional<double> score;
  std::string detail;
};

// Ordered numeric parameters; serialized into recipes and reports.
using ConstraintParams = std::vector<std::pair<std::string, double>>;

class Constraint {
 public:
  virtual ~Constraint() = default;
  virtual std::string id() const = 0;
  virtual ConstraintParams params() const { return {}; }
  virtual CompareAgainst compares_against() const { return CompareAgainst::kOriginal; }
  virtual bool is_swap_constraint() const { return false; }
  // check(x, x, {}) always passes.
  virtual ConstraintVerdict check(const TokenizedText& x, const TokenizedText& x_adv,
                                  std::span<const SwapRecord> swaps) const = 0;
};

class SwapConstraint : public Constraint {
 public:
  bool is_swap_constraint() const final { return true; }
  virtual ConstraintVerdict check_swap(const TokenizedText& x, const SwapRecord& swap) const = 0;
  // Passes iff every swap passes; reports the first failure.
  ConstraintVerdict check(const TokenizedText& x, const TokenizedText& x_adv,
                          std::span<const SwapRecord> swaps) const override;
};

// cos(original word, replacement) >= min_cos. Unknown words fail.
class WordEmbeddingDistance : public SwapConstraint {
 public:
  WordEmbeddingDistance(std::shared_ptr<const EmbeddingStore> store, double min_cos);
  std::string id() const override { return "word_embedding"; }
  ConstraintParams params() const override { return {{"min_cos", min_cos_}}; }
  double min_cos() const { return min_cos_; }
  ConstraintVerdict check_swap(const TokenizedText& x, const SwapRecord& swap) const override;

 private:
  std::shared_ptr<const EmbeddingStore> store_;
  double min_cos_;
};

// Original and replacement tags fall in the same coarse family (noun, verb,
// adjective, adverb). Inflection changes within a family pass.
class PartOfSpeechConsistency : public SwapConstraint {
 public:
  explicit PartOfSpeechConsistency(std::shared_ptr<const PosLexicon> lexicon);
  std::string id() const override { return "part_of_speech"; }
  ConstraintVerdict check_swap(const TokenizedText& x, const SwapRecord& swap) const override;

 private:
  std::shared_ptr<const PosLexicon> lexicon_;
};

const std::unordered_set<std::string>& default_stopwords();
bool is_stopword(std::string_view word);

// Stopwords are never replaced.
class StopwordModification : public SwapConstraint {
 public:
  StopwordModification() = default;
  std::string id() const override { return "stopword"; }
  ConstraintVerdict check_swap(const TokenizedText& x, const SwapRecord& swap) const override;
};

// Encoder cosine between reference and perturbed text >= min_sim, over the
// full text or a window around the changed tokens.
class SentenceEncoderSimilarity : public Constraint {
 public:
  SentenceEncoderSimilarity(std::shared_ptr<const SentenceEncoder> encoder, double min_sim,
                            std::optional<std::size_t> window_radius = std::nullopt,
                            CompareAgainst against = CompareAgainst::kOriginal);
  std::string id() const override { return "sentence_encoder"; }
  ConstraintParams params() const override;
  CompareAgainst compares_against() const override { return against_; }
  double min_sim() const { return min_sim_; }
  ConstraintVerdict check(const TokenizedText& x, const TokenizedText& x_adv,
                          std::span<const SwapRecord> swaps) const override;

 private:
  std::shared_ptr<const SentenceEncoder> encoder_;
  double min_sim_;
  std::optional<std::size_t> window_radius_;
  CompareAgainst against_;
};

// grammar_error_delta(x, x_adv) <= max_delta.
class GrammarErrorBound : public Constraint {
 public:
  explicit GrammarErrorBound(std::shared_ptr<const PosLexicon> lexicon, int max_delta = 0);
  std::string id() const override { return "grammar"; }
  ConstraintParams params() const override { return {{"max_delta", max_delta_}}; }
  ConstraintVerdict check(const TokenizedText& x, const TokenizedText& x_adv,
                          std::span<const SwapRecord> swaps) const override;

 private:
  std::shared_ptr<const PosLexicon> lexicon_;
  int max_delta_;
};

// At most max_words tokens differ.
class MaxWordsPerturbed : public Constraint {
 public:
  explicit MaxWordsPerturbed(std::size_t max_words) : max_words_(max_words) {}
  std::string id() const override { return "max_words_perturbed"; }
  ConstraintParams params() const override {
    return {{"max_words", static_cast<double>(max_words_)}};
  }
  ConstraintVerdict check(const TokenizedText& x, const TokenizedText& x_adv,
                          std::span<const SwapRecord> swaps) const override;

 private:
  std::size_t max_words_;
};

// Character edit distance between surface forms <= max_distance.
class EditDistanceLimit : public Constraint {
 public:
  explicit EditDistanceLimit(std::size_t max_distance) : max_distance_(max_distance) {}
  std::string id() const override { return "levenshtein"; }
  ConstraintParams params() const override {
    return {{"max_distance", static_cast<double>(max_distance_)}};
  }
  ConstraintVerdict check(const TokenizedText& x, const TokenizedText& x_adv,
                          std::span<const SwapRecord> swaps) const override;

 private:
  std::size_t max_distance_;
};

// Shared, immutable inputs the stock constraints are built from.
struct LanguageResources {
  std::shared_ptr<const EmbeddingStore> store;  // normalized
  std::shared_ptr<const PosLexicon> lexicon;
  std::shared_ptr<const SentenceEncoder> encoder;
};

class ConstraintSet {
 public:
  ConstraintSet() = default;
  ConstraintSet(std::string name, std::vector<std::shared_ptr<const Constraint>> constraints)
      : name_(std::move(name)), constraints_(std::move(constraints)) {}

  const std::string& name() const { return name_; }
  const std::vector<std::shared_ptr<const Constraint>>& constraints() const {
    return constraints_;
  }
  std::size_t size() const { return constraints_.size(); }
  ConstraintSet without(std::size_t index) const;

  // Largest min_cos among word-embedding constraints, if any.
  std::optional<double> min_word_cosine() const;

  bool allows_swap(const TokenizedText& x, const SwapRecord& swap) const;
  // Text constraints only. `previous` is the reference for constraints that
  // compare against the previous search step.
  bool allows_text(const TokenizedText& x, const TokenizedText& previous,
                   const TokenizedText& x_adv) const;
  // Every constraint on (x, x_adv); one verdict per constraint.
  std::vector<ConstraintVerdict> check_all(const TokenizedText& x,
                                           const TokenizedText& x_adv) const;

 private:
  std::string name_;
  std::vector<std::shared_ptr<const Constraint>> constraints_;
};

// LOOSE = {word_embedding >= 0.5, part_of_speech, stopword}
// STRICT = {word_embedding >= 0.9, sentence_encoder >= 0.98, grammar <= 0,
//           part_of_speech, stopword}
inline constexpr double kLooseWordCosine = 0.5;
inline constexpr double kStrictWordCosine = 0.9;
inline constexpr double kStrictSentenceSimilarity = 0.98;

ConstraintSet loose_preset(const LanguageResources& res);
ConstraintSet strict_preset(const LanguageResources& res);
// "loose" or "strict"; throws ConfigError naming the valid options.
ConstraintSet make_preset(const std::string& name, const LanguageResources& res);
const std::vector<std::string>& preset_names();

}  // namespace advtext

#endif  // ADVTEXT_CONSTRAINTS_HPP_
