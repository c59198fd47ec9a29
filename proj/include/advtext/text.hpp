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

// Token-level text representation shared by every other module.
//
// Tokenization is whitespace splitting followed by peeling leading and
// trailing punctuation into their own tokens. Each token remembers whether
// it was glued to its left neighbour, so detokenize() re-attaches peeled
// punctuation and joins everything else with a single space. Runs of
// whitespace therefore collapse; that is the only normalization applied
// besides optional lowercasing.

#ifndef ADVTEXT_TEXT_HPP_
#define ADVTEXT_TEXT_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace advtext {

inline constexpr const char* kLabelAttribute = "label";

class TokenizedText {
 public:
  TokenizedText() = default;
  TokenizedText(std::string original_text, std::vector<std::string> tokens,
                std::vector<bool> glued, bool lowercased,
                std::map<std::string, std::int64_t> attributes = {});

  const std::string& original_text() const { return original_text_; }
  const std::vector<std::string>& tokens() const { return tokens_; }
  const std::string& token(std::size_t i) const { return tokens_.at(i); }
  std::size_t size() const { return tokens_.size(); }
  bool empty() const { return tokens_.empty(); }
  bool lowercased() const { return lowercased_; }
  // glued(i) is true when token i followed token i-1 without whitespace.
  bool glued(std::size_t i) const { return glued_.at(i); }
  const std::vector<bool>& glue_flags() const { return glued_; }
  const std::map<std::string, std::int64_t>& attributes() const { return attributes_; }

  std::optional<int> label() const;
  TokenizedText with_label(int label) const;
  TokenizedText with_attribute(const std::string& key, std::int64_t value) const;
  // Same layout and attributes, different words. Sizes must match.
  TokenizedText with_tokens(std::vector<std::string> tokens) const;
  TokenizedText without_token(std::size_t index) const;
  // Contiguous sub-span [begin, end), clamped to the token count.
  TokenizedText window(std::size_t begin, std::size_t end) const;

  // Surface form of the current tokens.
  std::string text() const;

  bool operator==(const TokenizedText& other) const {
    return tokens_ == other.tokens_ && glued_ == other.glued_ &&
           attributes_ == other.attributes_;
  }

 private:
  std::string original_text_;
  std::vector<std::string> tokens_;
  std::vector<bool> glued_;
  bool lowercased_ = false;
  std::map<std::string, std::int64_t> attributes_;
};

struct SwapRecord {
  std::size_t index = 0;
  std::string original_word;
  std::string replacement_word;

  bool operator==(const SwapRecord&) const = default;
};

struct WordDiff {
  std::set<std::size_t> indices;
  double perturbed_word_percentage = 0.0;
};

// Throws EmptyInput for empty or whitespace-only text.
TokenizedText tokenize(std::string_view text, bool lowercase = true);

std::string detokenize(std::span<const std::string> tokens, const std::vector<bool>& glued);

// Throws ConflictingSwaps on a repeated index, IndexError when out of range,
// and ConflictingSwaps when a record's original_word does not match the text
// or equals its replacement.
TokenizedText apply_swaps(const TokenizedText& x, std::span<const SwapRecord> swaps);

// Throws LengthMismatch if the token counts differ.
WordDiff word_diff(const TokenizedText& x, const TokenizedText& x_adv);

// Unit-cost insert/delete/substitute edit distance over bytes.
std::size_t levenshtein(std::string_view a, std::string_view b);

// Swap list that turns x into x_adv, ordered by index.
std::vector<SwapRecord> swaps_between(const TokenizedText& x, const TokenizedText& x_adv);

// Key used by prediction caches.
std::string token_key(std::span<const std::string> tokens);

}  // namespace advtext

#endif  // ADVTEXT_TEXT_HPP_
