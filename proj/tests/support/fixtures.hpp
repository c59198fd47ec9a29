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

#ifndef ADVTEXT_TESTS_FIXTURES_HPP_
#define ADVTEXT_TESTS_FIXTURES_HPP_

#include <cmath>
#include <filesystem>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "advtext/constraints.hpp"
#include "advtext/dataset.hpp"
#include "advtext/embedding.hpp"
#include "advtext/encoder.hpp"
#include "advtext/pos.hpp"
#include "advtext/victim.hpp"

namespace advtext::testing {

inline std::filesystem::path data_dir() { return ADVTEXT_DATA_DIR; }
inline std::filesystem::path golden_dir() { return ADVTEXT_GOLDEN_DIR; }
inline std::filesystem::path source_dir() { return ADVTEXT_SOURCE_DIR; }

// Bundled toy assets, loaded once per process.
struct Toy {
  std::shared_ptr<const EmbeddingStore> store;
  std::shared_ptr<const PosLexicon> lexicon;
  std::shared_ptr<const SentenceEncoder> encoder;
  Dataset train;
  Dataset test;
  std::shared_ptr<const BagOfEmbeddingsClassifier> model;

  LanguageResources resources() const { return {store, lexicon, encoder}; }
};

inline const Toy& toy() {
  static const Toy t = [] {
    Toy x;
    x.store = std::make_shared<const EmbeddingStore>(
        normalize(load_embeddings(data_dir() / "toy_embeddings.txt")));
    x.lexicon = std::make_shared<const PosLexicon>(PosLexicon::load(data_dir() / "lexicon.tsv"));
    x.encoder = std::make_shared<const MeanEmbeddingEncoder>(x.store);
    x.train = load_dataset(data_dir() / "toy_train.jsonl", DatasetFormat::kJsonl);
    x.test = load_dataset(data_dir() / "toy_test.jsonl", DatasetFormat::kJsonl);
    x.model = std::make_shared<const BagOfEmbeddingsClassifier>(
        train(x.train.samples, x.store, TrainHyper{}));
    return x;
  }();
  return t;
}

// Binary victim whose positive-class logit is a caller-supplied function of
// the tokens: P(1) = sigmoid(logit).
class FunctionVictim : public VictimModel {
 public:
  using Logit = std::function<double(std::span<const std::string>)>;
  explicit FunctionVictim(Logit f) : f_(std::move(f)) {}
  std::size_t label_count() const override { return 2; }
  using VictimModel::predict_proba;
  std::vector<double> predict_proba(std::span<const std::string> tokens) const override {
    double z = f_(tokens);
    double p1 = 1.0 / (1.0 + std::exp(-z));
    return {1.0 - p1, p1};
  }

 private:
  Logit f_;
};

inline bool has_token(std::span<const std::string> tokens, const std::string& w) {
  for (const auto& t : tokens) {
    if (t == w) return true;
  }
  return false;
}

// Unit-normalized store from (word, vector) rows.
inline std::shared_ptr<const EmbeddingStore> make_store(
    const std::vector<std::pair<std::string, std::vector<double>>>& rows) {
  std::vector<std::string> words;
  std::vector<double> values;
  for (const auto& [w, v] : rows) {
    words.push_back(w);
    values.insert(values.end(), v.begin(), v.end());
  }
  return std::make_shared<const EmbeddingStore>(
      normalize(EmbeddingStore(rows.front().second.size(), words, values)));
}

}  // namespace advtext::testing

#endif  // ADVTEXT_TESTS_FIXTURES_HPP_
