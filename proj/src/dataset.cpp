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

#include "advtext/dataset.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "advtext/errors.hpp"

namespace advtext {

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string_view strip_cr(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

bool blank(std::string_view line) {
  return std::all_of(line.begin(), line.end(), [](char c) { return c == ' ' || c == '\t'; });
}

int parse_label(std::string_view s, std::size_t line) {
  std::size_t b = s.find_first_not_of(" \t");
  std::size_t e = s.find_last_not_of(" \t");
  if (b == std::string_view::npos) throw FormatError("empty label", line);
  s = s.substr(b, e - b + 1);
  std::size_t i = s[0] == '-' ? 1 : 0;
  if (i == s.size()) throw FormatError("non-integer label '" + std::string(s) + "'", line);
  for (std::size_t k = i; k < s.size(); ++k) {
    if (s[k] < '0' || s[k] > '9') {
      throw FormatError("non-integer label '" + std::string(s) + "'", line);
    }
  }
  try {
    return std::stoi(std::string(s));
  } catch (const std::exception&) {
    throw FormatError("label out of range '" + std::string(s) + "'", line);
  }
}

void add_sample(Dataset& d, const std::string& text, int label, std::size_t line) {
  if (label < 0) throw FormatError("negative label", line);
  d.samples.push_back(LabeledText{tokenize(text).with_label(label), label});
}

// Splits on newlines outside quotes so quoted fields may span lines.
std::vector<std::pair<std::size_t, std::string>> csv_records(std::string_view content) {
  std::vector<std::pair<std::size_t, std::string>> out;
  std::string cur;
  bool quoted = false;
  std::size_t line = 1, start = 1;
  for (char c : content) {
    if (c == '"') quoted = !quoted;
    if (c == '\n') {
      if (!quoted) {
        out.emplace_back(start, std::string(strip_cr(cur)));
        cur.clear();
        start = ++line;
        continue;
      }
      ++line;
    }
    cur.push_back(c);
  }
  if (quoted) throw FormatError("unterminated quoted field", start);
  if (!cur.empty()) out.emplace_back(start, std::string(strip_cr(cur)));
  return out;
}

}  // namespace

DatasetFormat parse_dataset_format(std::string_view name) {
  if (name == "jsonl") return DatasetFormat::kJsonl;
  if (name == "csv") return DatasetFormat::kCsv;
  throw ConfigError("unknown dataset format '" + std::string(name) + "'; valid formats: jsonl, csv");
}

DatasetFormat infer_dataset_format(const std::filesystem::path& path) {
  return path.extension() == ".csv" ? DatasetFormat::kCsv : DatasetFormat::kJsonl;
}

std::vector<std::string> split_csv_line(std::string_view line, std::size_t line_number) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur.push_back(c);
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (quoted) throw FormatError("unterminated quoted field", line_number);
  fields.push_back(std::move(cur));
  return fields;
}

Dataset parse_dataset(std::string_view content, DatasetFormat format, std::string name) {
  Dataset d;
  d.name = std::move(name);
  if (format == DatasetFormat::kJsonl) {
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= content.size()) {
      std::size_t nl = content.find('\n', pos);
      if (nl == std::string_view::npos) nl = content.size();
      std::string_view line = strip_cr(content.substr(pos, nl - pos));
      ++line_no;
      pos = nl + 1;
      if (blank(line)) continue;
      nlohmann::json row;
      try {
        row = nlohmann::json::parse(line);
      } catch (const nlohmann::json::parse_error& e) {
        throw FormatError(std::string("malformed JSON: ") + e.what(), line_no);
      }
      if (!row.is_object()) throw FormatError("row is not an object", line_no);
      if (!row.contains("text")) throw FormatError("missing field 'text'", line_no);
      if (!row.contains("label")) throw FormatError("missing field 'label'", line_no);
      if (!row["text"].is_string()) throw FormatError("'text' is not a string", line_no);
      const auto& lab = row["label"];
      if (!lab.is_number_integer()) throw FormatError("non-integer label", line_no);
      add_sample(d, row["text"].get<std::string>(), lab.get<int>(), line_no);
    }
  } else {
    auto records = csv_records(content);
    std::size_t text_col = 0, label_col = 0;
    bool header = false;
    for (const auto& [line_no, rec] : records) {
      if (blank(rec)) continue;
      auto fields = split_csv_line(rec, line_no);
      if (!header) {
        auto find = [&](const char* col) {
          auto it = std::find(fields.begin(), fields.end(), col);
          if (it == fields.end()) {
            throw FormatError(std::string("csv header lacks column '") + col + "'", line_no);
          }
          return static_cast<std::size_t>(it - fields.begin());
        };
        text_col = find("text");
        label_col = find("label");
        header = true;
        continue;
      }
      if (fields.size() <= std::max(text_col, label_col)) {
        throw FormatError("missing field", line_no);
      }
      add_sample(d, fields[text_col], parse_label(fields[label_col], line_no), line_no);
    }
    if (!header) throw FormatError("csv file has no header", 1);
  }
  int max_label = -1;
  for (const auto& s : d.samples) max_label = std::max(max_label, s.label);
  for (int i = 0; i <= max_label; ++i) d.label_names.push_back(std::to_string(i));
  return d;
}

Dataset load_dataset(const std::filesystem::path& path, DatasetFormat format) {
  return parse_dataset(read_file(path), format, path.stem().string());
}

void require_all_labels(const Dataset& dataset) {
  std::vector<std::size_t> counts(dataset.label_count(), 0);
  for (const auto& s : dataset.samples) ++counts[static_cast<std::size_t>(s.label)];
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] == 0) throw DegenerateDataset("no sample for label " + std::to_string(i));
  }
  if (counts.empty()) throw DegenerateDataset("dataset is empty");
}

}  // namespace advtext
