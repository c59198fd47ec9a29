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

#include "advtext/encoder.hpp"

#include <algorithm>
#include <cmath>

#include "advtext/errors.hpp"

namespace advtext {

namespace {

std::vector<double> mean_unit(const EmbeddingStore& store, std::span<const std::string> tokens) {
  const std::size_t dim = store.dimension();
  std::vector<double> v(dim, 0.0);
  for (const auto& t : tokens) {
    auto e = store.find(t);
    if (e.empty()) continue;
    for (std::size_t k = 0; k < dim; ++k) v[k] += e[k];
  }
  double n = norm(v);
  if (n < 1e-12) {
    std::fill(v.begin(), v.end(), 0.0);
    v[0] = 1.0;
    return v;
  }
  for (double& x : v) x /= n;
  return v;
}

}  // namespace

MeanEmbeddingEncoder::MeanEmbeddingEncoder(std::shared_ptr<const EmbeddingStore> store)
    : store_(std::move(store)) {
  if (!store_ || !store_->normalized()) {
    throw ConfigError("mean-embedding encoder requires a normalized store");
  }
}

std::vector<double> MeanEmbeddingEncoder::encode(std::span<const std::string> tokens) const {
  return mean_unit(*store_, tokens);
}

std::vector<double> encode_mean_embedding(const EmbeddingStore& store, const TokenizedText& x) {
  if (!store.normalized()) throw ConfigError("encode_mean_embedding requires a normalized store");
  return mean_unit(store, x.tokens());
}

double sentence_similarity(const SentenceEncoder& encoder, const TokenizedText& x,
                           const TokenizedText& x_adv) {
  return cosine(encoder.encode(x), encoder.encode(x_adv));
}

double windowed_sentence_similarity(const SentenceEncoder& encoder, const TokenizedText& x,
                                    const TokenizedText& x_adv, std::size_t radius) {
  auto diff = word_diff(x, x_adv);
  if (diff.indices.empty()) return 1.0;
  const std::size_t lo = *diff.indices.begin();
  const std::size_t hi = *diff.indices.rbegin();
  const std::size_t begin = lo > radius ? lo - radius : 0;
  const std::size_t end = hi + radius + 1;
  return sentence_similarity(encoder, x.window(begin, end), x_adv.window(begin, end));
}

}  // namespace advtext
