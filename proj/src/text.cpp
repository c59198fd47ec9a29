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

#include "advtext/text.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

#include "advtext/errors.hpp"

namespace advtext {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

bool is_leading_punct(char c) { return c == '(' || c == '"' || c == '[' || c == '`'; }

bool is_trailing_punct(char c) {
  switch (c) {
    case '.': case ',': case '!': case '?': case ';': case ':':
    case ')': case '"': case ']':
      return true;
    default:
      return false;
  }
}

}  // namespace

TokenizedText::TokenizedText(std::string original_text, std::vector<std::string> tokens,
                             std::vector<bool> glued, bool lowercased,
                             std::map<std::string, std::int64_t> attributes)
    : original_text_(std::move(original_text)),
      tokens_(std::move(tokens)),
      glued_(std::move(glued)),
      lowercased_(lowercased),
      attributes_(std::move(attributes)) {
  glued_.resize(tokens_.size(), false);
  if (!glued_.empty()) glued_[0] = false;
}

std::optional<int> TokenizedText::label() const {
  auto it = attributes_.find(kLabelAttribute);
  if (it == attributes_.end()) return std::nullopt;
  return static_cast<int>(it->second);
}

TokenizedText TokenizedText::with_label(int label) const {
  return with_attribute(kLabelAttribute, label);
}

TokenizedText TokenizedText::with_attribute(const std::string& key, std::int64_t value) const {
  TokenizedText out = *this;
  out.attributes_[key] = value;
  return out;
}

TokenizedText TokenizedText::with_tokens(std::vector<std::string> tokens) const {
  if (tokens.size() != tokens_.size()) {
    throw LengthMismatch("with_tokens: expected " + std::to_string(tokens_.size()) +
                         " tokens, got " + std::to_string(tokens.size()));
  }
  TokenizedText out = *this;
  out.tokens_ = std::move(tokens);
  return out;
}

TokenizedText TokenizedText::without_token(std::size_t index) const {
  if (index >= tokens_.size()) throw IndexError("without_token: index out of range");
  TokenizedText out = *this;
  out.tokens_.erase(out.tokens_.begin() + static_cast<std::ptrdiff_t>(index));
  out.glued_.erase(out.glued_.begin() + static_cast<std::ptrdiff_t>(index));
  if (!out.glued_.empty()) out.glued_[0] = false;
  return out;
}

TokenizedText TokenizedText::window(std::size_t begin, std::size_t end) const {
  end = std::min(end, tokens_.size());
  begin = std::min(begin, end);
  TokenizedText out = *this;
  out.tokens_.assign(tokens_.begin() + static_cast<std::ptrdiff_t>(begin),
                     tokens_.begin() + static_cast<std::ptrdiff_t>(end));
  out.glued_.assign(glued_.begin() + static_cast<std::ptrdiff_t>(begin),
                    glued_.begin() + static_cast<std::ptrdiff_t>(end));
  if (!out.glued_.empty()) out.glued_[0] = false;
  return out;
}

std::string TokenizedText::text() const { return detokenize(tokens_, glued_); }

TokenizedText tokenize(std::string_view text, bool lowercase) {
  std::vector<std::string> tokens;
  std::vector<bool> glued;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_space(text[i])) ++i;
    if (i >= text.size()) break;
    std::size_t end = i;
    while (end < text.size() && !is_space(text[end])) ++end;
    std::string_view chunk = text.substr(i, end - i);
    i = end;

    bool first_in_chunk = true;
    auto emit = [&](std::string_view piece) {
      std::string t(piece);
      if (lowercase) {
        std::transform(t.begin(), t.end(), t.begin(),
                       [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
      }
      tokens.push_back(std::move(t));
      glued.push_back(!first_in_chunk);
      first_in_chunk = false;
    };

    std::size_t lead = 0;
    while (lead < chunk.size() && is_leading_punct(chunk[lead])) ++lead;
    std::size_t trail = chunk.size();
    while (trail > lead && is_trailing_punct(chunk[trail - 1])) --trail;
    if (trail == lead) {
      // Pure punctuation chunks such as "--" or "..." stay whole.
      emit(chunk);
      continue;
    }
    for (std::size_t k = 0; k < lead; ++k) emit(chunk.substr(k, 1));
    emit(chunk.substr(lead, trail - lead));
    for (std::size_t k = trail; k < chunk.size(); ++k) emit(chunk.substr(k, 1));
  }
  if (tokens.empty()) throw EmptyInput("tokenize: text is empty after trimming");
  return TokenizedText(std::string(text), std::move(tokens), std::move(glued), lowercase);
}

std::string detokenize(std::span<const std::string> tokens, const std::vector<bool>& glued) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0 && !(i < glued.size() && glued[i])) out.push_back(' ');
    out += tokens[i];
  }
  return out;
}

TokenizedText apply_swaps(const TokenizedText& x, std::span<const SwapRecord> swaps) {
  std::vector<std::string> tokens = x.tokens();
  std::vector<bool> seen(tokens.size(), false);
  for (const SwapRecord& s : swaps) {
    if (s.index >= tokens.size()) {
      throw IndexError("apply_swaps: index " + std::to_string(s.index) + " out of range for " +
                       std::to_string(tokens.size()) + " tokens");
    }
    if (seen[s.index]) {
      throw ConflictingSwaps("apply_swaps: index " + std::to_string(s.index) + " swapped twice");
    }
    if (s.original_word == s.replacement_word) {
      throw ConflictingSwaps("apply_swaps: replacement equals original at index " +
                             std::to_string(s.index));
    }
    if (x.token(s.index) != s.original_word) {
      throw ConflictingSwaps("apply_swaps: token at index " + std::to_string(s.index) + " is '" +
                             x.token(s.index) + "', not '" + s.original_word + "'");
    }
    seen[s.index] = true;
    tokens[s.index] = s.replacement_word;
  }
  return x.with_tokens(std::move(tokens));
}

WordDiff word_diff(const TokenizedText& x, const TokenizedText& x_adv) {
  if (x.size() != x_adv.size()) {
    throw LengthMismatch("word_diff: " + std::to_string(x.size()) + " vs " +
                         std::to_string(x_adv.size()) + " tokens");
  }
  WordDiff diff;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x.token(i) != x_adv.token(i)) diff.indices.insert(i);
  }
  if (!x.empty()) {
    diff.perturbed_word_percentage =
        100.0 * static_cast<double>(diff.indices.size()) / static_cast<double>(x.size());
  }
  return diff;
}

std::size_t levenshtein(std::string_view a, std::string_view b) {
  if (a.size() < b.size()) std::swap(a, b);
  std::vector<std::size_t> row(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      std::size_t up = row[j];
      std::size_t cost = a[i - 1] == b[j - 1] ? 0 : 1;
      row[j] = std::min({row[j] + 1, row[j - 1] + 1, diag + cost});
      diag = up;
    }
  }
  return row[b.size()];
}

std::vector<SwapRecord> swaps_between(const TokenizedText& x, const TokenizedText& x_adv) {
  WordDiff diff = word_diff(x, x_adv);
  std::vector<SwapRecord> swaps;
  swaps.reserve(diff.indices.size());
  for (std::size_t i : diff.indices) swaps.push_back({i, x.token(i), x_adv.token(i)});
  return swaps;
}

std::string token_key(std::span<const std::string> tokens) {
  std::string key;
  for (const std::string& t : tokens) {
    key += t;
    key.push_back('\x1f');
  }
  return key;
}

}  // namespace advtext
