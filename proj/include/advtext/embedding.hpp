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

#ifndef ADVTEXT_EMBEDDING_HPP_
#define ADVTEXT_EMBEDDING_HPP_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace advtext {

// Vocabulary of dense vectors stored row-major in one buffer. Rows keep
// file order; lookups go through a hash index.
class EmbeddingStore {
 public:
  EmbeddingStore() = default;
  // Duplicate words keep their first row; later rows are counted in
  // duplicate_count(). Throws FormatError on a row of the wrong length.
  EmbeddingStore(std::size_t dimension, std::vector<std::string> words,
                 std::vector<double> values, bool normalized = false);

  std::size_t dimension() const { return dimension_; }
  std::size_t size() const { return words_.size(); }
  bool normalized() const { return normalized_; }
  std::size_t duplicate_count() const { return duplicates_; }

  bool contains(std::string_view word) const;
  std::optional<std::size_t> index_of(std::string_view word) const;
  const std::string& word(std::size_t row) const { return words_.at(row); }
  const std::vector<std::string>& words() const { return words_; }
  std::span<const double> vector(std::size_t row) const;
  // Empty span for out-of-vocabulary words.
  std::span<const double> find(std::string_view word) const;
  const std::vector<double>& values() const { return values_; }

  // FNV-1a over words and value bits; ties a saved model to its embeddings.
  std::string fingerprint() const;

 private:
  std::size_t dimension_ = 0;
  std::vector<std::string> words_;
  std::vector<double> values_;
  std::unordered_map<std::string, std::size_t> index_;
  bool normalized_ = false;
  std::size_t duplicates_ = 0;
};

struct Neighbor {
  std::string word;
  double cosine = 0.0;

  bool operator==(const Neighbor&) const = default;
};

enum class EmbeddingFormat { kWord2VecText };

// "<count> <dimension>" header, then "word v1 ... vd" rows.
EmbeddingStore load_embeddings(const std::filesystem::path& path,
                               EmbeddingFormat format = EmbeddingFormat::kWord2VecText);
EmbeddingStore parse_embeddings(std::string_view content);

// Throws DegenerateVector on a zero row.
EmbeddingStore normalize(const EmbeddingStore& store);

double dot(std::span<const double> u, std::span<const double> v);
double norm(std::span<const double> v);
// Clamped to [-1, 1]; throws DegenerateVector for a zero vector and
// DomainError on a dimension mismatch.
double cosine(std::span<const double> u, std::span<const double> v);
double euclidean_distance(std::span<const double> u, std::span<const double> v);

// Largest Euclidean distance between unit vectors whose cosine is >= eps.
double euclidean_threshold_from_cosine(double eps);

// Exact linear scan. Result is sorted by cosine descending, then word
// ascending, excludes the query, and is truncated to max_candidates.
// Out-of-vocabulary queries yield an empty list.
std::vector<Neighbor> nearest_neighbors(const EmbeddingStore& store, std::string_view word,
                                        std::size_t max_candidates, double min_cosine);

// Same scan filtered by Euclidean distance <= max_distance instead.
std::vector<Neighbor> nearest_neighbors_within(const EmbeddingStore& store, std::string_view word,
                                               std::size_t max_candidates, double max_distance);

}  // namespace advtext

#endif  // ADVTEXT_EMBEDDING_HPP_
