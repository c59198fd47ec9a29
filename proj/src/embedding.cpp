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

#include "advtext/embedding.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "advtext/errors.hpp"

namespace advtext {

namespace {

// Splits on runs of spaces/tabs.
std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i >= line.size()) break;
    std::size_t end = i;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t') ++end;
    out.push_back(line.substr(i, end - i));
    i = end;
  }
  return out;
}

template <class T>
bool parse_number(std::string_view s, T& out) {
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace

EmbeddingStore::EmbeddingStore(std::size_t dimension, std::vector<std::string> words,
                               std::vector<double> values, bool normalized)
    : dimension_(dimension), normalized_(normalized) {
  if (dimension == 0) throw FormatError("embedding dimension must be positive");
  if (values.size() != words.size() * dimension) {
    throw FormatError("embedding buffer holds " + std::to_string(values.size()) +
                      " values, expected " + std::to_string(words.size() * dimension));
  }
  words_.reserve(words.size());
  values_.reserve(values.size());
  for (std::size_t r = 0; r < words.size(); ++r) {
    if (index_.contains(words[r])) {
      ++duplicates_;
      continue;
    }
    index_.emplace(words[r], words_.size());
    words_.push_back(std::move(words[r]));
    values_.insert(values_.end(), values.begin() + static_cast<std::ptrdiff_t>(r * dimension),
                   values.begin() + static_cast<std::ptrdiff_t>((r + 1) * dimension));
  }
}

bool EmbeddingStore::contains(std::string_view word) const {
  return index_.find(std::string(word)) != index_.end();
}

std::optional<std::size_t> EmbeddingStore::index_of(std::string_view word) const {
  auto it = index_.find(std::string(word));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::span<const double> EmbeddingStore::vector(std::size_t row) const {
  return std::span<const double>(values_).subspan(row * dimension_, dimension_);
}

std::span<const double> EmbeddingStore::find(std::string_view word) const {
  auto row = index_of(word);
  if (!row) return {};
  return vector(*row);
}

std::string EmbeddingStore::fingerprint() const {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint64_t byte) {
    h ^= byte;
    h *= 1099511628211ULL;
  };
  for (std::size_t r = 0; r < words_.size(); ++r) {
    for (unsigned char c : words_[r]) mix(c);
    mix(0);
    for (double v : vector(r)) {
      auto bits = std::bit_cast<std::uint64_t>(v == 0.0 ? 0.0 : v);
      for (int k = 0; k < 8; ++k) mix((bits >> (8 * k)) & 0xff);
    }
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

EmbeddingStore parse_embeddings(std::string_view content) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  auto next_line = [&](std::string_view& line) {
    if (pos >= content.size()) return false;
    std::size_t end = content.find('\n', pos);
    if (end == std::string_view::npos) end = content.size();
    line = content.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    pos = end + 1;
    ++line_no;
    return true;
  };

  std::string_view line;
  if (!next_line(line)) throw FormatError("embedding file is empty", 1);
  auto header = split_fields(line);
  std::size_t count = 0;
  std::size_t dim = 0;
  if (header.size() != 2 || !parse_number(header[0], count) || !parse_number(header[1], dim) ||
      dim == 0) {
    throw FormatError("malformed header, expected '<count> <dimension>'", 1);
  }

  std::vector<std::string> words;
  std::vector<double> values;
  words.reserve(count);
  values.reserve(count * dim);
  while (next_line(line)) {
    auto fields = split_fields(line);
    if (fields.empty()) continue;
    if (words.size() == count) {
      throw FormatError("more rows than the header's count of " + std::to_string(count), line_no);
    }
    if (fields.size() != dim + 1) {
      throw FormatError("row for '" + std::string(fields[0]) + "' has " +
                            std::to_string(fields.size() - 1) + " values, expected " +
                            std::to_string(dim),
                        line_no);
    }
    words.emplace_back(fields[0]);
    for (std::size_t k = 1; k <= dim; ++k) {
      double v = 0.0;
      if (!parse_number(fields[k], v)) {
        throw FormatError("non-numeric value '" + std::string(fields[k]) + "'", line_no);
      }
      values.push_back(v);
    }
  }
  if (words.size() != count) {
    throw FormatError("header declares " + std::to_string(count) + " rows, file has " +
                      std::to_string(words.size()));
  }
  return EmbeddingStore(dim, std::move(words), std::move(values), false);
}

EmbeddingStore load_embeddings(const std::filesystem::path& path, EmbeddingFormat format) {
  (void)format;  // word2vec text is the only format
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open embeddings file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_embeddings(buf.str());
}

EmbeddingStore normalize(const EmbeddingStore& store) {
  std::vector<double> values = store.values();
  const std::size_t dim = store.dimension();
  for (std::size_t r = 0; r < store.size(); ++r) {
    std::span<double> row(values.data() + r * dim, dim);
    double n = norm(row);
    if (n == 0.0 || !std::isfinite(n)) throw DegenerateVector(store.word(r));
    for (double& v : row) v /= n;
  }
  return EmbeddingStore(dim, store.words(), std::move(values), true);
}

double dot(std::span<const double> u, std::span<const double> v) {
  double s = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
  return s;
}

double norm(std::span<const double> v) { return std::sqrt(dot(v, v)); }

double cosine(std::span<const double> u, std::span<const double> v) {
  if (u.size() != v.size()) throw DomainError("cosine: dimension mismatch");
  double nu = norm(u);
  double nv = norm(v);
  if (nu == 0.0) throw DegenerateVector("<u>");
  if (nv == 0.0) throw DegenerateVector("<v>");
  return std::clamp(dot(u, v) / (nu * nv), -1.0, 1.0);
}

double euclidean_distance(std::span<const double> u, std::span<const double> v) {
  if (u.size() != v.size()) throw DomainError("euclidean_distance: dimension mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    double d = u[i] - v[i];
    s += d * d;
  }
  return std::sqrt(s);
}

double euclidean_threshold_from_cosine(double eps) {
  if (!(eps <= 1.0) || eps < -1.0) {
    throw DomainError("cosine threshold must lie in [-1, 1], got " + std::to_string(eps));
  }
  return std::sqrt(2.0 - 2.0 * eps);
}

namespace {

void sort_and_truncate(std::vector<Neighbor>& out, std::size_t max_candidates) {
  std::sort(out.begin(), out.end(), [](const Neighbor& a, const Neighbor& b) {
    if (a.cosine != b.cosine) return a.cosine > b.cosine;
    return a.word < b.word;
  });
  if (out.size() > max_candidates) out.resize(max_candidates);
}

}  // namespace

std::vector<Neighbor> nearest_neighbors(const EmbeddingStore& store, std::string_view word,
                                        std::size_t max_candidates, double min_cosine) {
  std::vector<Neighbor> out;
  auto query_row = store.index_of(word);
  if (!query_row || max_candidates == 0) return out;
  auto q = store.vector(*query_row);
  for (std::size_t r = 0; r < store.size(); ++r) {
    if (r == *query_row) continue;
    double c = cosine(q, store.vector(r));
    if (c >= min_cosine) out.push_back({store.word(r), c});
  }
  sort_and_truncate(out, max_candidates);
  return out;
}

std::vector<Neighbor> nearest_neighbors_within(const EmbeddingStore& store, std::string_view word,
                                               std::size_t max_candidates, double max_distance) {
  std::vector<Neighbor> out;
  auto query_row = store.index_of(word);
  if (!query_row || max_candidates == 0) return out;
  auto q = store.vector(*query_row);
  for (std::size_t r = 0; r < store.size(); ++r) {
    if (r == *query_row) continue;
    if (euclidean_distance(q, store.vector(r)) <= max_distance) {
      out.push_back({store.word(r), cosine(q, store.vector(r))});
    }
  }
  sort_and_truncate(out, max_candidates);
  return out;
}

}  // namespace advtext
