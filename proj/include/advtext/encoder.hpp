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

#ifndef ADVTEXT_ENCODER_HPP_
#define ADVTEXT_ENCODER_HPP_

#include <cstddef>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "advtext/embedding.hpp"
#include "advtext/text.hpp"

namespace advtext {

// Maps a text to a fixed-length vector; never the zero vector.
class SentenceEncoder {
 public:
  virtual ~SentenceEncoder() = default;
  virtual std::string name() const = 0;
  virtual std::size_t dimension() const = 0;
  virtual std::vector<double> encode(std::span<const std::string> tokens) const = 0;

  std::vector<double> encode(const TokenizedText& x) const {
    return encode(std::span<const std::string>(x.tokens()));
  }
};

// Unit-normalized mean of the in-vocabulary token vectors. With no known
// token (or a mean that cancels to zero) the result is the first basis
// vector e_0.
class MeanEmbeddingEncoder : public SentenceEncoder {
 public:
  // Throws ConfigError unless the store is normalized.
  explicit MeanEmbeddingEncoder(std::shared_ptr<const EmbeddingStore> store);

  std::string name() const override { return "mean-embedding"; }
  std::size_t dimension() const override { return store_->dimension(); }
  using SentenceEncoder::encode;
  std::vector<double> encode(std::span<const std::string> tokens) const override;

 private:
  std::shared_ptr<const EmbeddingStore> store_;
};

std::vector<double> encode_mean_embedding(const EmbeddingStore& store, const TokenizedText& x);

double sentence_similarity(const SentenceEncoder& encoder, const TokenizedText& x,
                           const TokenizedText& x_adv);

// Similarity restricted to tokens within `radius` of any changed index.
// Texts must have equal length; identical texts compare as 1.
double windowed_sentence_similarity(const SentenceEncoder& encoder, const TokenizedText& x,
                                    const TokenizedText& x_adv, std::size_t radius);

}  // namespace advtext

#endif  // ADVTEXT_ENCODER_HPP_
