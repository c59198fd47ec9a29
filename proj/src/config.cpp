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

#include "advtext/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "advtext/errors.hpp"

namespace advtext {

using nlohmann::json;

namespace {

void reject_unknown(const json& j, const std::set<std::string>& allowed, const std::string& where) {
  if (!j.is_object()) throw ConfigError(where + " must be a JSON object");
  for (const auto& [key, _] : j.items()) {
    if (!allowed.contains(key)) throw ConfigError("unknown key '" + key + "' in " + where);
  }
}

std::string get_string(const json& j, const char* key, const std::string& where) {
  if (!j.at(key).is_string()) throw ConfigError("'" + std::string(key) + "' in " + where + " must be a string");
  return j.at(key).get<std::string>();
}

std::size_t get_count(const json& j, const char* key, const std::string& where) {
  const json& v = j.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw ConfigError("'" + std::string(key) + "' in " + where + " must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

double get_number(const json& j, const char* key, const std::string& where) {
  if (!j.at(key).is_number()) throw ConfigError("'" + std::string(key) + "' in " + where + " must be a number");
  return j.at(key).get<double>();
}

}  // namespace

RunConfig parse_config(const json& j, const std::filesystem::path& base_dir) {
  reject_unknown(j,
                 {"embeddings", "lexicon", "dataset", "dataset_format", "test_dataset", "model",
                  "output", "recipe", "preset", "search", "campaign", "train", "augment"},
                 "config");
  RunConfig c;
  c.base_dir = base_dir;
  auto path = [&](const char* key, bool must_exist) -> std::optional<std::filesystem::path> {
    if (!j.contains(key)) return std::nullopt;
    std::filesystem::path p = get_string(j, key, "config");
    if (p.is_relative()) p = base_dir / p;
    p = p.lexically_normal();
    if (must_exist && !std::filesystem::exists(p)) {
      throw ConfigError("config '" + std::string(key) + "' file not found: " + p.string());
    }
    return p;
  };
  c.embeddings = path("embeddings", true);
  c.lexicon = path("lexicon", true);
  c.dataset = path("dataset", true);
  c.test_dataset = path("test_dataset", true);
  c.model = path("model", false);
  c.output = path("output", false);
  if (j.contains("dataset_format")) {
    c.dataset_format = parse_dataset_format(get_string(j, "dataset_format", "config"));
  }
  if (j.contains("recipe")) {
    if (j["recipe"].is_string()) {
      c.preset = j["recipe"].get<std::string>();
    } else if (j["recipe"].is_object()) {
      c.recipe = j["recipe"];
    } else {
      throw ConfigError("'recipe' must be a preset name or a recipe object");
    }
  }
  if (j.contains("preset")) c.preset = get_string(j, "preset", "config");
  if (j.contains("search")) c.search = get_string(j, "search", "config");
  if (j.contains("campaign")) {
    const json& s = j["campaign"];
    reject_unknown(s, {"seed_count", "rng_seed", "workers", "budget"}, "campaign");
    if (s.contains("seed_count")) c.campaign.seed_count = get_count(s, "seed_count", "campaign");
    if (s.contains("rng_seed")) c.campaign.rng_seed = get_count(s, "rng_seed", "campaign");
    if (s.contains("workers")) c.campaign.workers = get_count(s, "workers", "campaign");
    if (s.contains("budget")) c.campaign.budget = get_count(s, "budget", "campaign");
  }
  if (j.contains("train")) {
    const json& t = j["train"];
    reject_unknown(t, {"learning_rate", "epochs", "l2", "seed"}, "train");
    if (t.contains("learning_rate")) c.train.learning_rate = get_number(t, "learning_rate", "train");
    if (t.contains("epochs")) c.train.epochs = get_count(t, "epochs", "train");
    if (t.contains("l2")) c.train.l2 = get_number(t, "l2", "train");
    if (t.contains("seed")) c.train.seed = get_count(t, "seed", "train");
  }
  if (j.contains("augment")) {
    const json& a = j["augment"];
    reject_unknown(a, {"runs"}, "augment");
    if (a.contains("runs")) c.augment.runs = get_count(a, "runs", "augment");
  }
  return c;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  json j;
  try {
    j = json::parse(ss.str());
  } catch (const json::parse_error& e) {
    throw ConfigError("config '" + path.string() + "' is not valid JSON: " + e.what());
  }
  return parse_config(j, path.parent_path().empty() ? std::filesystem::path(".") : path.parent_path());
}

}  // namespace advtext
