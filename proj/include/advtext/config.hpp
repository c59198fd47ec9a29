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

#ifndef ADVTEXT_CONFIG_HPP_
#define ADVTEXT_CONFIG_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "advtext/dataset.hpp"
#include "advtext/victim.hpp"

namespace advtext {

struct CampaignSettings {
  std::optional<std::size_t> seed_count;  // first N seeds; all when unset
  std::uint64_t rng_seed = 0;
  std::size_t workers = 1;
  std::optional<std::size_t> budget;
};

struct AugmentSettings {
  std::size_t runs = 3;
};

// Relative paths are resolved against the config file's directory.
struct RunConfig {
  std::filesystem::path base_dir;
  std::optional<std::filesystem::path> embeddings;
  std::optional<std::filesystem::path> lexicon;
  std::optional<std::filesystem::path> dataset;
  std::optional<std::filesystem::path> test_dataset;
  std::optional<std::filesystem::path> model;
  std::optional<std::filesystem::path> output;
  std::optional<DatasetFormat> dataset_format;
  // Inline recipe object; when set it wins over preset/search.
  std::optional<nlohmann::json> recipe;
  std::string preset = "loose";
  std::string search = "greedy";
  CampaignSettings campaign;
  TrainHyper train;
  AugmentSettings augment;
};

// Unknown keys, wrong types and missing input files raise ConfigError.
// The model and output paths need not exist yet.
RunConfig parse_config(const nlohmann::json& j, const std::filesystem::path& base_dir);
RunConfig load_config(const std::filesystem::path& path);

}  // namespace advtext

#endif  // ADVTEXT_CONFIG_HPP_
