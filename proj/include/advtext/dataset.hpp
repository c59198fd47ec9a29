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

#ifndef ADVTEXT_DATASET_HPP_
#define ADVTEXT_DATASET_HPP_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "advtext/victim.hpp"

namespace advtext {

enum class DatasetFormat { kJsonl, kCsv };

// Throws ConfigError for anything but "jsonl" or "csv".
DatasetFormat parse_dataset_format(std::string_view name);
// From the file extension; defaults to jsonl.
DatasetFormat infer_dataset_format(const std::filesystem::path& path);

struct Dataset {
  std::string name;
  std::vector<LabeledText> samples;
  std::vector<std::string> label_names;

  std::size_t label_count() const { return label_names.size(); }
};

// jsonl rows are {"text": string, "label": integer}; csv needs a header with
// text and label columns. Line numbers in FormatError are 1-based.
Dataset load_dataset(const std::filesystem::path& path, DatasetFormat format);
Dataset parse_dataset(std::string_view content, DatasetFormat format, std::string name = "");

// Splits one CSV record; quotes may wrap commas and doubled quotes.
std::vector<std::string> split_csv_line(std::string_view line, std::size_t line_number = 0);

// Throws DegenerateDataset when some label in [0, label_count) has no sample.
void require_all_labels(const Dataset& dataset);

}  // namespace advtext

#endif  // ADVTEXT_DATASET_HPP_
