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

#include "advtext/victim.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "advtext/errors.hpp"
#include "advtext/rng.hpp"

namespace advtext {

using nlohmann::json;

std::vector<double> softmax(std::span<const double> scores) {
  std::vector<double> out(scores.begin(), scores.end());
  if (out.empty()) return out;
  double m = *std::max_element(out.begin(), out.end());
  double sum = 0.0;
  for (double& v : out) {
    v = std::exp(v - m);
    sum += v;
  }
  for (double& v : out) v /= sum;
  return out;
}

std::size_t argmax(std::span<const double> values) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] > values[best]) best = i;
  }
  return best;
}

BagOfEmbeddingsClassifier::BagOfEmbeddingsClassifier(std::shared_ptr<const EmbeddingStore> store,
                                                     std::size_t label_count,
                                                     std::vector<double> weights,
                                                     std::vector<double> bias)
    : store_(std::move(store)),
      label_count_(label_count),
      weights_(std::move(weights)),
      bias_(std::move(bias)) {
  if (!store_) throw ConfigError("classifier requires an embedding store");
  if (label_count_ == 0) throw ConfigError("classifier requires at least one label");
  if (weights_.size() != store_->dimension() * label_count_ || bias_.size() != label_count_) {
    throw FormatError("classifier parameter shapes do not match dimension x label_count");
  }
}

std::vector<double> BagOfEmbeddingsClassifier::features(
    std::span<const std::string> tokens) const {
  const std::size_t dim = store_->dimension();
  std::vector<double> f(dim, 0.0);
  std::size_t known = 0;
  for (const std::string& t : tokens) {
    auto v = store_->find(t);
    if (v.empty()) continue;
    for (std::size_t k = 0; k < dim; ++k) f[k] += v[k];
    ++known;
  }
  if (known > 0) {
    for (double& v : f) v /= static_cast<double>(known);
  }
  return f;
}

std::vector<double> BagOfEmbeddingsClassifier::scores(std::span<const double> features) const {
  std::vector<double> s = bias_;
  for (std::size_t k = 0; k < features.size(); ++k) {
    const double fk = features[k];
    if (fk == 0.0) continue;
    const double* row = weights_.data() + k * label_count_;
    for (std::size_t c = 0; c < label_count_; ++c) s[c] += fk * row[c];
  }
  return s;
}

std::vector<double> BagOfEmbeddingsClassifier::predict_proba(
    std::span<const std::string> tokens) const {
  auto f = features(tokens);
  auto s = scores(f);
  return softmax(s);
}

SoftmaxObjective::SoftmaxObjective(std::vector<std::vector<double>> features,
                                   std::vector<int> labels, std::size_t label_count, double l2)
    : features_(std::move(features)),
      labels_(std::move(labels)),
      dimension_(features_.empty() ? 0 : features_.front().size()),
      label_count_(label_count),
      l2_(l2) {
  if (features_.size() != labels_.size()) {
    throw LengthMismatch("objective: feature and label counts differ");
  }
}

double SoftmaxObjective::loss(std::span<const double> params) const {
  std::vector<double> unused(parameter_count());
  return loss_and_gradient(params, unused);
}

double SoftmaxObjective::loss_and_gradient(std::span<const double> params,
                                           std::span<double> gradient) const {
  const std::size_t n_w = dimension_ * label_count_;
  std::fill(gradient.begin(), gradient.end(), 0.0);
  const double inv_n = features_.empty() ? 0.0 : 1.0 / static_cast<double>(features_.size());
  double total = 0.0;
  std::vector<double> s(label_count_);
  for (std::size_t i = 0; i < features_.size(); ++i) {
    const auto& f = features_[i];
    for (std::size_t c = 0; c < label_count_; ++c) s[c] = params[n_w + c];
    for (std::size_t k = 0; k < dimension_; ++k) {
      for (std::size_t c = 0; c < label_count_; ++c) s[c] += f[k] * params[k * label_count_ + c];
    }
    auto p = softmax(s);
    const auto y = static_cast<std::size_t>(labels_[i]);
    total -= std::log(std::max(p[y], 1e-300));
    for (std::size_t c = 0; c < label_count_; ++c) {
      const double r = (p[c] - (c == y ? 1.0 : 0.0)) * inv_n;
      gradient[n_w + c] += r;
      for (std::size_t k = 0; k < dimension_; ++k) gradient[k * label_count_ + c] += f[k] * r;
    }
  }
  double penalty = 0.0;
  for (std::size_t j = 0; j < n_w; ++j) {
    penalty += params[j] * params[j];
    gradient[j] += l2_ * params[j];
  }
  return total * inv_n + 0.5 * l2_ * penalty;
}

BagOfEmbeddingsClassifier train(std::span<const LabeledText> dataset,
                                std::shared_ptr<const EmbeddingStore> store,
                                const TrainHyper& hyper, const EpochCallback& on_epoch) {
  if (dataset.empty()) throw DegenerateDataset("train: dataset is empty");
  if (!store) throw ConfigError("train: embedding store is required");
  std::set<int> classes;
  int max_label = 0;
  for (const auto& s : dataset) {
    if (s.label < 0) throw DegenerateDataset("train: negative label");
    classes.insert(s.label);
    max_label = std::max(max_label, s.label);
  }
  if (classes.size() < 2) throw DegenerateDataset("train: need at least two classes");
  const std::size_t label_count = static_cast<std::size_t>(max_label) + 1;
  const std::size_t dim = store->dimension();

  Rng rng(hyper.seed);
  std::vector<double> params(dim * label_count + label_count, 0.0);
  for (std::size_t j = 0; j < dim * label_count; ++j) params[j] = rng.uniform(-0.01, 0.01);

  BagOfEmbeddingsClassifier probe(store, label_count, std::vector<double>(dim * label_count, 0.0),
                                  std::vector<double>(label_count, 0.0));
  std::vector<std::vector<double>> feats;
  std::vector<int> labels;
  feats.reserve(dataset.size());
  for (const auto& s : dataset) {
    feats.push_back(probe.features(s.text.tokens()));
    labels.push_back(s.label);
  }
  SoftmaxObjective objective(std::move(feats), std::move(labels), label_count, hyper.l2);

  auto snapshot = [&] {
    std::vector<double> w(params.begin(), params.begin() + static_cast<std::ptrdiff_t>(dim * label_count));
    std::vector<double> b(params.begin() + static_cast<std::ptrdiff_t>(dim * label_count), params.end());
    return BagOfEmbeddingsClassifier(store, label_count, std::move(w), std::move(b));
  };

  std::vector<double> grad(params.size());
  for (std::size_t epoch = 1; epoch <= hyper.epochs; ++epoch) {
    objective.loss_and_gradient(params, grad);
    for (std::size_t j = 0; j < params.size(); ++j) params[j] -= hyper.learning_rate * grad[j];
    if (on_epoch) on_epoch(epoch, snapshot());
  }
  return snapshot();
}

double accuracy(const VictimModel& model, std::span<const LabeledText> samples) {
  if (samples.empty()) return 0.0;
  std::size_t correct = 0;
  for (const auto& s : samples) {
    auto p = model.predict_proba(s.text);
    if (static_cast<int>(argmax(p)) == s.label) ++correct;
  }
  return 100.0 * static_cast<double>(correct) / static_cast<double>(samples.size());
}

std::string model_to_json(const BagOfEmbeddingsClassifier& model) {
  json doc;
  doc["dimension"] = model.dimension();
  doc["label_count"] = model.label_count();
  doc["weights"] = model.weights();
  doc["bias"] = model.bias();
  doc["embedding_fingerprint"] = model.store().fingerprint();
  return doc.dump(2) + "\n";
}

void save_model(const BagOfEmbeddingsClassifier& model, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write model file " + path.string());
  out << model_to_json(model);
  if (!out) throw IoError("failed writing model file " + path.string());
}

BagOfEmbeddingsClassifier model_from_json(const std::string& text,
                                          std::shared_ptr<const EmbeddingStore> store) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("model JSON: ") + e.what());
  }
  try {
    const auto dimension = doc.at("dimension").get<std::size_t>();
    const auto label_count = doc.at("label_count").get<std::size_t>();
    auto weights = doc.at("weights").get<std::vector<double>>();
    auto bias = doc.at("bias").get<std::vector<double>>();
    const auto fingerprint = doc.at("embedding_fingerprint").get<std::string>();
    if (!store) throw ConfigError("model load requires an embedding store");
    if (dimension != store->dimension()) {
      throw FormatError("model dimension " + std::to_string(dimension) +
                        " does not match embeddings dimension " +
                        std::to_string(store->dimension()));
    }
    if (fingerprint != store->fingerprint()) {
      throw FormatError("model was trained on different embeddings (fingerprint " + fingerprint +
                        ", store " + store->fingerprint() + ")");
    }
    return BagOfEmbeddingsClassifier(std::move(store), label_count, std::move(weights),
                                     std::move(bias));
  } catch (const json::exception& e) {
    throw FormatError(std::string("model JSON: ") + e.what());
  }
}

BagOfEmbeddingsClassifier load_model(const std::filesystem::path& path,
                                     std::shared_ptr<const EmbeddingStore> store) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open model file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return model_from_json(buf.str(), std::move(store));
}

std::vector<double> QueryCounter::predict(std::span<const std::string> tokens) {
  std::string key = token_key(tokens);
  std::lock_guard<std::mutex> lock(mu_);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  if (limit_ && count_ >= *limit_) {
    throw BudgetExhausted("query budget of " + std::to_string(*limit_) + " exhausted");
  }
  auto p = inner_->predict_proba(tokens);
  ++count_;
  cache_.emplace(std::move(key), p);
  return p;
}

std::size_t QueryCounter::count() const {
  std::lock_guard<std::mutex> lock(mu_);
  return count_;
}

void QueryCounter::reset() {
  std::lock_guard<std::mutex> lock(mu_);
  count_ = 0;
  cache_.clear();
}

void QueryCounter::set_limit(std::optional<std::size_t> limit) {
  std::lock_guard<std::mutex> lock(mu_);
  limit_ = limit;
}

std::optional<std::size_t> QueryCounter::limit() const {
  std::lock_guard<std::mutex> lock(mu_);
  return limit_;
}

}  // namespace advtext
