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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "advtext/config.hpp"
#include "advtext/dataset.hpp"
#include "advtext/errors.hpp"
#include "fixtures.hpp"

namespace advtext {
namespace {

namespace fs = std::filesystem;

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("advtext_cfg_" + std::to_string(counter_++))) {
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }
  fs::path write(const std::string& name, const std::string& content) const {
    std::ofstream(path_ / name) << content;
    return path_ / name;
  }

 private:
  static inline int counter_ = 0;
  fs::path path_;
};

TEST(Dataset, TwoRowJsonl) {
  Dataset d = parse_dataset(
      "{\"text\": \"A fine film.\", \"label\": 1}\n\n{\"text\": \"dull\", \"label\": 0}\n",
      DatasetFormat::kJsonl, "two");
  ASSERT_EQ(d.samples.size(), 2u);
  EXPECT_EQ(d.samples[0].label, 1);
  EXPECT_EQ(d.samples[0].text.text(), "a fine film.");
  EXPECT_EQ(d.samples[0].text.label(), 1);
  EXPECT_EQ(d.label_count(), 2u);
  EXPECT_NO_THROW(require_all_labels(d));
}

TEST(Dataset, JsonlErrorsCarryLineNumbers) {
  auto line_of = [](const std::string& content) {
    try {
      parse_dataset(content, DatasetFormat::kJsonl);
    } catch (const FormatError& e) {
      return e.line();
    }
    return std::size_t{0};
  };
  EXPECT_EQ(line_of("{\"text\": \"a\", \"label\": 0}\n{\"text\": \"b\"}\n"), 2u);
  EXPECT_EQ(line_of("{\"label\": 0}\n"), 1u);
  EXPECT_EQ(line_of("{\"text\": \"a\", \"label\": 0}\n\n{\"text\": \"b\", \"label\": \"x\"}\n"), 3u);
  EXPECT_EQ(line_of("{\"text\": \"a\", \"label\": 0.5}\n"), 1u);
  EXPECT_EQ(line_of("{\"text\": \"a\", \"label\": 0}\n{broken\n"), 2u);
}

TEST(Dataset, CsvWithQuotedCommas) {
  Dataset d = parse_dataset("label,text\n1,\"good, really good\"\n0,\"a \"\"dull\"\" one\"\n",
                            DatasetFormat::kCsv);
  ASSERT_EQ(d.samples.size(), 2u);
  EXPECT_EQ(d.samples[0].text.text(), "good, really good");
  EXPECT_EQ(d.samples[1].text.text(), "a \"dull\" one");
  EXPECT_EQ(d.samples[1].label, 0);
}

TEST(Dataset, CsvErrors) {
  EXPECT_THROW(parse_dataset("words,label\nx,1\n", DatasetFormat::kCsv), FormatError);
  try {
    parse_dataset("text,label\nok,1\nbad,one\n", DatasetFormat::kCsv);
    FAIL();
  } catch (const FormatError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  EXPECT_EQ(split_csv_line("a,\"b,c\",d"), (std::vector<std::string>{"a", "b,c", "d"}));
}

TEST(Dataset, MissingLabelClass) {
  Dataset d = parse_dataset("{\"text\": \"a\", \"label\": 0}\n{\"text\": \"b\", \"label\": 2}\n",
                            DatasetFormat::kJsonl);
  EXPECT_THROW(require_all_labels(d), DegenerateDataset);
}

TEST(Dataset, FormatNames) {
  EXPECT_EQ(parse_dataset_format("csv"), DatasetFormat::kCsv);
  EXPECT_THROW(parse_dataset_format("tsv"), ConfigError);
  EXPECT_EQ(infer_dataset_format("x/y.csv"), DatasetFormat::kCsv);
  EXPECT_EQ(infer_dataset_format("x/y.jsonl"), DatasetFormat::kJsonl);
  EXPECT_THROW(load_dataset("/nonexistent/advtext.jsonl", DatasetFormat::kJsonl), IoError);
}

TEST(Dataset, BundledToyData) {
  const auto& t = testing::toy();
  EXPECT_EQ(t.train.samples.size(), 200u);
  EXPECT_EQ(t.test.samples.size(), 100u);
  EXPECT_NO_THROW(require_all_labels(t.train));
}

TEST(Config, RelativePathsResolveAgainstConfigDir) {
  TempDir dir;
  dir.write("train.jsonl", "{\"text\": \"a\", \"label\": 0}\n");
  fs::create_directories(dir.path() / "sub");
  auto cfg = dir.write("sub/run.json",
                       R"({"dataset": "../train.jsonl", "model": "m.json", "preset": "strict",
                           "campaign": {"seed_count": 5, "workers": 2, "budget": 100}})");
  RunConfig c = load_config(cfg);
  EXPECT_EQ(fs::weakly_canonical(*c.dataset), fs::weakly_canonical(dir.path() / "train.jsonl"));
  EXPECT_EQ(*c.model, dir.path() / "sub" / "m.json");
  EXPECT_EQ(c.preset, "strict");
  EXPECT_EQ(c.search, "greedy");
  EXPECT_EQ(c.campaign.seed_count, 5u);
  EXPECT_EQ(c.campaign.workers, 2u);
  EXPECT_EQ(c.campaign.budget, 100u);
}

TEST(Config, RejectsUnknownKeysAndMissingFiles) {
  TempDir dir;
  EXPECT_THROW(parse_config(nlohmann::json{{"presets", "loose"}}, dir.path()), ConfigError);
  EXPECT_THROW(parse_config(nlohmann::json{{"dataset", "missing.jsonl"}}, dir.path()),
               ConfigError);
  EXPECT_THROW(
      parse_config(nlohmann::json::parse(R"({"campaign": {"workers": "two"}})"), dir.path()),
      ConfigError);
  EXPECT_THROW(parse_config(nlohmann::json::parse(R"({"train": {"lr": 1}})"), dir.path()),
               ConfigError);
  EXPECT_THROW(load_config(dir.path() / "absent.json"), ConfigError);
  auto broken = dir.write("broken.json", "{ not json");
  EXPECT_THROW(load_config(broken), ConfigError);
}

TEST(Config, BundledToyConfigLoads) {
  RunConfig c = load_config(testing::source_dir() / "configs" / "toy.json");
  EXPECT_EQ(c.preset, "strict");
  EXPECT_EQ(c.campaign.rng_seed, 7u);
  EXPECT_TRUE(fs::exists(*c.embeddings));
  EXPECT_TRUE(fs::exists(*c.test_dataset));
}

}  // namespace
}  // namespace advtext
