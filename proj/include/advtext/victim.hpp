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

#ifndef ADVTEXT_VICTIM_HPP_
#define ADVTEXT_VICTIM_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "advtext/embedding.hpp"
#include "advtext/text.hpp"

namespace advtext {

struct LabeledText {
  TokenizedText text;
  int label = 0;
};

// The model under attack.
class VictimModel {
 public:
  virtual ~VictimModel() = default;
  virtual std::size_t label_count() const = 0;
  // Distribution over labels; sums to 1.
  virtual std::vector<double> predict_proba(std::span<const std::string> tokens) const = 0;

  std::vector<double> predict_proba(const TokenizedText& x) const {
    return predict_proba(std::span<const std::string>(x.tokens()));
  }
};

std::vector<double> softmax(std::span<const double> scores);
std::size_t argmax(std::span<const double> values);

struct TrainHyper {
  double learning_rate = 2.0;
  std::size_t epochs = 300;
  double l2 = 1e-4;
  std::uint64_t seed = 0;
};

// Multinomial logistic regression over the mean embedding of the
// in-vocabulary tokens. An input with no known token maps to the zero
// feature vector, so its prediction is softmax(bias).
class BagOfEmbeddingsClassifier : public VictimModel {
 public:
  // weights is dimension x label_count, row-major.
  BagOfEmbeddingsClassifier(std::shared_ptr<const EmbeddingStore> store, std::size_t label_count,
                            std::vector<double> weights, std::vector<double> bias);

  std::size_t label_count() const override { return label_count_; }
  std::size_t dimension() const { return store_->dimension(); }
  using VictimModel::predict_proba;
  std::vector<double> predict_proba(std::span<const std::string> tokens) const override;

  std::vector<double> features(std::span<const std::string> tokens) const;
  std::vector<double> scores(std::span<const double> features) const;

  const std::vector<double>& weights() const { return weights_; }
  const std::vector<double>& bias() const { return bias_; }
  const EmbeddingStore& store() const { return *store_; }
  std::shared_ptr<const EmbeddingStore> store_ptr() const { return store_; }

 private:
  std::shared_ptr<const EmbeddingStore> store_;
  std::size_t label_count_;
  std::vector<double> weights_;
  std::vector<double> bias_;
};

// Mean cross-entropy plus (l2 / 2) * |W|^2 over precomputed features.
// Parameters are flattened as weights (row-major) followed by bias.
class SoftmaxObjective {
 public:
  SoftmaxObjective(std::vector<std::vector<double>> features, std::vector<int> labels,
                   std::size_t label_count, double l2);

  std::size_t parameter_count() const { return dimension_ * label_count_ + label_count_; }
  double loss(std::span<const double> params) const;
  // Returns the loss and writes d(loss)/d(params) into gradient.
  double loss_and_gradient(std::span<const double> params, std::span<double> gradient) const;

 private:
  std::vector<std::vector<double>> features_;
  std::vector<int> labels_;
  std::size_t dimension_;
  std::size_t label_count_;
  double l2_;
};

// Called after each epoch with the 1-based epoch number and current model.
using EpochCallback = std::function<void(std::size_t, const BagOfEmbeddingsClassifier&)>;

// Full-batch gradient descent; one epoch is one step over the whole set.
// Throws DegenerateDataset for empty input or fewer than two classes.
BagOfEmbeddingsClassifier train(std::span<const LabeledText> dataset,
                                std::shared_ptr<const EmbeddingStore> store,
                                const TrainHyper& hyper, const EpochCallback& on_epoch = {});

// Percent of samples whose argmax prediction equals the label.
double accuracy(const VictimModel& model, std::span<const LabeledText> samples);

void save_model(const BagOfEmbeddingsClassifier& model, const std::filesystem::path& path);
std::string model_to_json(const BagOfEmbeddingsClassifier& model);
// Throws FormatError when the document is malformed or its fingerprint does
// not match store.
BagOfEmbeddingsClassifier load_model(const std::filesystem::path& path,
                                     std::shared_ptr<const EmbeddingStore> store);
BagOfEmbeddingsClassifier model_from_json(const std::string& json,
                                          std::shared_ptr<const EmbeddingStore> store);

// Counting, caching wrapper. count() is the number of distinct token
// sequences forwarded to the inner model since the last reset(). All
// methods are internally synchronized.
class QueryCounter {
 public:
  explicit QueryCounter(const VictimModel& inner) : inner_(&inner) {}

  std::size_t label_count() const { return inner_->label_count(); }
  // Throws BudgetExhausted when a cache miss would exceed the limit.
  std::vector<double> predict(std::span<const std::string> tokens);
  std::vector<double> predict(const TokenizedText& x) {
    return predict(std::span<const std::string>(x.tokens()));
  }

  std::size_t count() const;
  void reset();
  // Caps the absolute count; nullopt removes the cap.
  void set_limit(std::optional<std::size_t> limit);
  std::optional<std::size_t> limit() const;

 private:
  const VictimModel* inner_;
  mutable std::mutex mu_;
  std::size_t count_ = 0;
  std::optional<std::size_t> limit_;
  std::unordered_map<std::string, std::vector<double>> cache_;
};

}  // namespace advtext

#endif  // ADVTEXT_VICTIM_HPP_
