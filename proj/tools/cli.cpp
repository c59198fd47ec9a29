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

#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "advtext/config.hpp"
#include "advtext/constraints.hpp"
#include "advtext/dataset.hpp"
#include "advtext/embedding.hpp"
#include "advtext/encoder.hpp"
#include "advtext/errors.hpp"
#include "advtext/harness.hpp"
#include "advtext/pos.hpp"
#include "advtext/recipe.hpp"
#include "advtext/report.hpp"
#include "advtext/rng.hpp"
#include "advtext/search.hpp"
#include "advtext/victim.hpp"

namespace advtext::cli {

namespace {

struct Options {
  std::string command;
  std::string config;
  std::optional<std::string> preset;
  std::optional<std::string> search;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> workers;
  std::optional<std::size_t> budget;
  std::optional<std::string> out;
  std::string format = "json";
  std::string presets = "loose,strict";
  std::string searches = "greedy,genetic";
  std::optional<std::string> pairs;
  std::optional<std::string> in;
  std::optional<std::string> real;
  std::optional<std::string> perturbed;
  std::optional<std::size_t> runs;
  std::optional<std::size_t> epochs;
};

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  if (out.empty()) throw ConfigError("empty list '" + s + "'");
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// One text per line: a JSON object with "text", or the raw line.
std::vector<TokenizedText> load_texts(const std::string& path) {
  std::vector<TokenizedText> out;
  std::stringstream ss(read_file(path));
  std::string line;
  std::size_t n = 0;
  while (std::getline(ss, line)) {
    ++n;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (line.front() == '{') {
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(line);
      } catch (const nlohmann::json::parse_error&) {
        throw FormatError("malformed JSON in '" + path + "'", n);
      }
      if (!j.contains("text") || !j["text"].is_string()) {
        throw FormatError("missing field 'text' in '" + path + "'", n);
      }
      out.push_back(tokenize(j["text"].get<std::string>()));
    } else {
      out.push_back(tokenize(line));
    }
  }
  return out;
}

class Session {
 public:
  Session(const Options& o, std::ostream& out, std::ostream& err) : opt_(o), out_(out), err_(err) {
    if (!o.config.empty()) cfg_ = load_config(o.config);
    format_ = parse_report_format(o.format);
  }

  const RunConfig& config() const { return cfg_; }

  std::uint64_t seed() const { return opt_.seed.value_or(cfg_.campaign.rng_seed); }

  void require_resources() {
    if (store_) return;
    if (!cfg_.embeddings) throw ConfigError("config needs 'embeddings'");
    store_ = std::make_shared<const EmbeddingStore>(normalize(load_embeddings(*cfg_.embeddings)));
    lexicon_ = std::make_shared<const PosLexicon>(cfg_.lexicon ? PosLexicon::load(*cfg_.lexicon)
                                                               : PosLexicon());
    encoder_ = std::make_shared<const MeanEmbeddingEncoder>(store_);
  }

  LanguageResources resources() {
    require_resources();
    return LanguageResources{store_, lexicon_, encoder_};
  }

  std::shared_ptr<const EmbeddingStore> store() {
    require_resources();
    return store_;
  }

  const PosLexicon& lexicon() {
    require_resources();
    return *lexicon_;
  }

  Dataset load(const std::filesystem::path& p) const {
    return load_dataset(p, cfg_.dataset_format.value_or(infer_dataset_format(p)));
  }

  Dataset train_data() const {
    if (!cfg_.dataset) throw ConfigError("config needs 'dataset'");
    return load(*cfg_.dataset);
  }

  Dataset seed_data() const {
    Dataset d = cfg_.test_dataset ? load(*cfg_.test_dataset) : train_data();
    if (cfg_.campaign.seed_count && *cfg_.campaign.seed_count < d.samples.size()) {
      d.samples.resize(*cfg_.campaign.seed_count);
    }
    if (d.samples.empty()) throw ConfigError("no seed examples");
    return d;
  }

  TrainHyper hyper() const {
    TrainHyper h = cfg_.train;
    if (opt_.seed) h.seed = *opt_.seed;
    return h;
  }

  BagOfEmbeddingsClassifier victim() {
    if (cfg_.model && std::filesystem::exists(*cfg_.model)) return load_model(*cfg_.model, store());
    Dataset d = train_data();
    require_all_labels(d);
    return train(d.samples, store(), hyper());
  }

  AttackRecipe recipe(std::optional<std::string> preset_override = std::nullopt) {
    AttackRecipe r;
    std::string search = opt_.search.value_or(cfg_.search);
    if (cfg_.recipe && !opt_.preset && !preset_override) {
      r = recipe_from_json(*cfg_.recipe, resources());
      if (opt_.search) r.search.method = parse_search(*opt_.search);
    } else {
      r = make_recipe(preset_override.value_or(opt_.preset.value_or(cfg_.preset)),
                      parse_search(search), resources());
    }
    if (auto b = opt_.budget ? opt_.budget : cfg_.campaign.budget) r.query_budget = *b;
    validate_recipe(r);
    return r;
  }

  CampaignOptions campaign_options() {
    CampaignOptions c;
    c.workers = opt_.workers.value_or(cfg_.campaign.workers);
    c.rng_seed = seed();
    c.lexicon = &lexicon();
    return c;
  }

  void emit(const Report& report) {
    std::optional<std::filesystem::path> path;
    if (opt_.out) {
      path = *opt_.out;
    } else if (cfg_.output) {
      std::filesystem::create_directories(*cfg_.output);
      const char* ext = format_ == ReportFormat::kJson ? ".json"
                        : format_ == ReportFormat::kCsv ? ".csv"
                                                        : ".md";
      path = *cfg_.output / (opt_.command + ext);
    }
    if (path) {
      write_report(report, format_, *path);
      err_ << "wrote " << report_kind(report) << " report to " << path->string() << "\n";
    } else {
      out_ << render(report, format_);
    }
  }

  std::ostream& err() { return err_; }
  std::ostream& out() { return out_; }
  const Options& options() const { return opt_; }
  ReportFormat format() const { return format_; }

 private:
  const Options& opt_;
  std::ostream& out_;
  std::ostream& err_;
  RunConfig cfg_;
  ReportFormat format_ = ReportFormat::kJson;
  std::shared_ptr<const EmbeddingStore> store_;
  std::shared_ptr<const PosLexicon> lexicon_;
  std::shared_ptr<const SentenceEncoder> encoder_;
};

void cmd_train(Session& s) {
  Dataset d = s.train_data();
  require_all_labels(d);
  BagOfEmbeddingsClassifier model = train(d.samples, s.store(), s.hyper());
  nlohmann::json summary;
  summary["train_accuracy"] = accuracy(model, d.samples);
  if (s.config().test_dataset) {
    summary["test_accuracy"] = accuracy(model, s.load(*s.config().test_dataset).samples);
  }
  std::optional<std::filesystem::path> path;
  if (s.options().out) {
    path = *s.options().out;
  } else if (s.config().model) {
    path = *s.config().model;
  }
  if (!path) throw ConfigError("train needs --out or a 'model' path in the config");
  save_model(model, *path);
  summary["model"] = path->string();
  s.out() << summary.dump() << "\n";
}

void cmd_attack(Session& s) {
  AttackRecipe r = s.recipe();
  auto model = s.victim();
  Dataset seeds = s.seed_data();
  CampaignReport rep = run_campaign(model, r, seeds.samples, s.campaign_options());
  s.err() << rep.preset << "/" << rep.search << ": " << rep.successes << " of "
          << rep.attempted - rep.skipped << " attacks succeeded\n";
  s.emit(rep);
}

void cmd_ablate(Session& s) {
  AttackRecipe r = s.recipe();
  auto model = s.victim();
  Dataset seeds = s.seed_data();
  s.emit(run_ablation(model, r, seeds.samples, s.campaign_options()));
}

void cmd_compare(Session& s) {
  std::vector<AttackRecipe> presets;
  for (const auto& p : split_list(s.options().presets)) presets.push_back(s.recipe(p));
  std::vector<SearchMethod> searches;
  for (const auto& m : split_list(s.options().searches)) searches.push_back(parse_search(m));
  auto model = s.victim();
  Dataset seeds = s.seed_data();
  s.emit(compare_search_methods(model, presets, searches, seeds.samples, s.campaign_options()));
}

void cmd_augment(Session& s) {
  AttackRecipe r = s.recipe();
  Dataset train_set = s.train_data();
  require_all_labels(train_set);
  if (!s.config().test_dataset) throw ConfigError("augment needs 'test_dataset' in the config");
  Dataset test_set = s.load(*s.config().test_dataset);
  AugmentOptions a;
  a.hyper = s.hyper();
  if (s.options().epochs) a.hyper.epochs = *s.options().epochs;
  std::size_t runs = s.options().runs.value_or(s.config().augment.runs);
  if (runs == 0) throw ConfigError("--runs must be positive");
  a.run_seeds.clear();
  for (std::size_t i = 0; i < runs; ++i) a.run_seeds.push_back(derive_seed(s.seed(), i));
  a.workers = s.campaign_options().workers;
  s.emit(augment_and_retrain(train_set.samples, test_set.samples, s.store(), r, a));
}

void cmd_eval_grammar(Session& s) {
  if (!s.options().pairs) throw ConfigError("eval-grammar needs --pairs");
  std::vector<std::pair<std::string, std::string>> pairs;
  std::stringstream ss(read_file(*s.options().pairs));
  std::string line;
  std::size_t n = 0;
  while (std::getline(ss, line)) {
    ++n;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error&) {
      throw FormatError("malformed JSON in pairs file", n);
    }
    if (!j.contains("original") || !j["original"].is_string()) {
      throw FormatError("missing field 'original'", n);
    }
    if (!j.contains("perturbed") || !j["perturbed"].is_string()) {
      throw FormatError("missing field 'perturbed'", n);
    }
    pairs.emplace_back(j["original"].get<std::string>(), j["perturbed"].get<std::string>());
  }
  s.emit(evaluate_grammar_pairs(s.lexicon(), pairs));
}

void cmd_suspicion(Session& s) {
  std::vector<TokenizedText> real, perturbed;
  const Options& o = s.options();
  if (o.in) {
    Report rep = read_report(*o.in);
    auto* campaign = std::get_if<CampaignReport>(&rep);
    if (!campaign) throw ConfigError("--in must be a campaign report");
    for (const auto& e : campaign->per_example) {
      if (e.status != AttackStatus::kSuccess || !e.adversarial_text) continue;
      real.push_back(tokenize(e.original_text));
      perturbed.push_back(tokenize(*e.adversarial_text));
    }
  } else {
    if (!o.real || !o.perturbed) throw ConfigError("suspicion needs --in or both --real and --perturbed");
    real = load_texts(*o.real);
    perturbed = load_texts(*o.perturbed);
  }
  if (real.empty() || perturbed.empty()) throw ConfigError("suspicion needs non-empty text sets");
  TrainHyper h = suspicion_hyper();
  if (s.options().epochs) h.epochs = *s.options().epochs;
  s.emit(train_suspicion_classifier(s.store(), real, perturbed, s.seed(), h));
}

void cmd_report(Session& s) {
  if (!s.options().in) throw ConfigError("report needs --in");
  s.emit(read_report(*s.options().in));
}

void add_config(CLI::App* c, Options& o, bool required = true) {
  auto* opt = c->add_option("--config", o.config, "Run configuration (JSON)");
  if (required) opt->required();
}

void add_output(CLI::App* c, Options& o) {
  c->add_option("--out", o.out, "Output path (default: config output dir, else stdout)");
  c->add_option("--format", o.format, "Report format: json, csv or markdown")
      ->capture_default_str();
}

void add_campaign(CLI::App* c, Options& o) {
  c->add_option("--preset", o.preset, "Constraint preset: loose or strict");
  c->add_option("--search", o.search, "Search method: greedy, genetic or exhaustive");
  c->add_option("--seed", o.seed, "Global random seed");
  c->add_option("--workers", o.workers, "Worker threads for the campaign");
  c->add_option("--budget", o.budget, "Query budget per seed example");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Adversarial example generation and evaluation for text classifiers", "advtext"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "advtext 0.1.0");

  auto* train_cmd = app.add_subcommand("train", "Train the bag-of-embeddings victim");
  add_config(train_cmd, o);
  train_cmd->add_option("--seed", o.seed, "Initialization seed");
  train_cmd->add_option("--out", o.out, "Model output path (default: config model path)");

  auto* attack = app.add_subcommand("attack", "Run an attack campaign over the seed dataset");
  add_config(attack, o);
  add_campaign(attack, o);
  add_output(attack, o);

  auto* ablate = app.add_subcommand("ablate", "Remove one constraint at a time and re-run");
  add_config(ablate, o);
  add_campaign(ablate, o);
  add_output(ablate, o);

  auto* compare = app.add_subcommand("compare", "Grid of search methods by constraint presets");
  add_config(compare, o);
  compare->add_option("--presets", o.presets, "Comma-separated presets")->capture_default_str();
  compare->add_option("--searches", o.searches, "Comma-separated search methods")
      ->capture_default_str();
  compare->add_option("--seed", o.seed, "Global random seed");
  compare->add_option("--workers", o.workers, "Worker threads for each campaign");
  compare->add_option("--budget", o.budget, "Query budget per seed example");
  add_output(compare, o);

  auto* augment = app.add_subcommand("augment", "Adversarial training: retrain on augmented data");
  add_config(augment, o);
  add_campaign(augment, o);
  augment->add_option("--runs", o.runs, "Number of run seeds to average");
  augment->add_option("--epochs", o.epochs, "Training epochs per model");
  add_output(augment, o);

  auto* grammar = app.add_subcommand("eval-grammar", "Grammar error deltas for text pairs");
  add_config(grammar, o);
  grammar->add_option("--pairs", o.pairs, "JSONL with original and perturbed fields")->required();
  add_output(grammar, o);

  auto* suspicion = app.add_subcommand("suspicion", "Train a real versus perturbed classifier");
  add_config(suspicion, o);
  suspicion->add_option("--in", o.in, "Campaign report supplying both text sets");
  suspicion->add_option("--real", o.real, "Real texts, one per line");
  suspicion->add_option("--perturbed", o.perturbed, "Perturbed texts, one per line");
  suspicion->add_option("--seed", o.seed, "Split and initialization seed");
  suspicion->add_option("--epochs", o.epochs, "Detector training epochs (default 1000)");
  add_output(suspicion, o);

  auto* report = app.add_subcommand("report", "Convert a JSON report to another format");
  add_config(report, o, false);
  report->add_option("--in", o.in, "JSON report to convert")->required();
  add_output(report, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitConfig;
  }

  const std::vector<std::pair<CLI::App*, void (*)(Session&)>> commands = {
      {train_cmd, cmd_train}, {attack, cmd_attack},       {ablate, cmd_ablate},
      {compare, cmd_compare}, {augment, cmd_augment},     {grammar, cmd_eval_grammar},
      {suspicion, cmd_suspicion}, {report, cmd_report}};
  try {
    for (const auto& [sub, fn] : commands) {
      if (!sub->parsed()) continue;
      o.command = sub->get_name();
      Session session(o, out, err);
      fn(session);
      return kExitOk;
    }
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitConfig;
}

}  // namespace advtext::cli
