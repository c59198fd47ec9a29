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

#include "advtext/report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "advtext/errors.hpp"

namespace advtext {

using nlohmann::json;

namespace {

template <typename T>
json opt(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <typename T>
std::optional<T> get_opt(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

json to_j(const ExampleSummary& e) {
  return json{{"index", e.index},
              {"status", std::string(status_name(e.status))},
              {"original_label", e.original_label},
              {"final_label", e.final_label},
              {"queries", e.queries},
              {"swap_count", e.swap_count},
              {"perturbed_word_pct", e.perturbed_word_pct},
              {"original_text", e.original_text},
              {"adversarial_text", opt(e.adversarial_text)},
              {"grammar_error_delta", opt(e.grammar_error_delta)},
              {"detail", e.detail}};
}

ExampleSummary example_from(const json& j) {
  ExampleSummary e;
  e.index = j.at("index").get<std::size_t>();
  auto status = parse_status(j.at("status").get<std::string>());
  if (!status) throw FormatError("unknown status '" + j.at("status").get<std::string>() + "'");
  e.status = *status;
  e.original_label = j.at("original_label").get<int>();
  e.final_label = j.at("final_label").get<int>();
  e.queries = j.at("queries").get<std::size_t>();
  e.swap_count = j.at("swap_count").get<std::size_t>();
  e.perturbed_word_pct = j.at("perturbed_word_pct").get<double>();
  e.original_text = j.at("original_text").get<std::string>();
  e.adversarial_text = get_opt<std::string>(j, "adversarial_text");
  e.grammar_error_delta = get_opt<int>(j, "grammar_error_delta");
  e.detail = j.at("detail").get<std::string>();
  return e;
}

json body(const CampaignReport& r) {
  json ex = json::array();
  for (const auto& e : r.per_example) ex.push_back(to_j(e));
  return json{{"preset", r.preset},
              {"search", r.search},
              {"rng_seed", r.rng_seed},
              {"attempted", r.attempted},
              {"skipped", r.skipped},
              {"successes", r.successes},
              {"failed", r.failed},
              {"budget_exhausted", r.budget_exhausted},
              {"attack_success_rate", r.attack_success_rate},
              {"after_attack_accuracy", r.after_attack_accuracy},
              {"mean_perturbed_word_pct", r.mean_perturbed_word_pct},
              {"mean_queries", r.mean_queries},
              {"skipped_all", r.skipped_all},
              {"grammar_error_pct", opt(r.grammar_error_pct)},
              {"per_example", ex}};
}

CampaignReport campaign_from(const json& j) {
  CampaignReport r;
  r.preset = j.at("preset").get<std::string>();
  r.search = j.at("search").get<std::string>();
  r.rng_seed = j.at("rng_seed").get<std::uint64_t>();
  r.attempted = j.at("attempted").get<std::size_t>();
  r.skipped = j.at("skipped").get<std::size_t>();
  r.successes = j.at("successes").get<std::size_t>();
  r.failed = j.at("failed").get<std::size_t>();
  r.budget_exhausted = j.at("budget_exhausted").get<std::size_t>();
  r.attack_success_rate = j.at("attack_success_rate").get<double>();
  r.after_attack_accuracy = j.at("after_attack_accuracy").get<double>();
  r.mean_perturbed_word_pct = j.at("mean_perturbed_word_pct").get<double>();
  r.mean_queries = j.at("mean_queries").get<double>();
  r.skipped_all = j.at("skipped_all").get<bool>();
  r.grammar_error_pct = get_opt<double>(j, "grammar_error_pct");
  for (const auto& e : j.at("per_example")) r.per_example.push_back(example_from(e));
  return r;
}

json body(const AblationReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"removed", row.removed},
                    {"success_rate", row.success_rate},
                    {"delta", row.delta},
                    {"mean_queries", row.mean_queries}});
  }
  return json{{"preset", r.preset},
              {"search", r.search},
              {"baseline_success_rate", r.baseline_success_rate},
              {"rows", rows},
              {"findings", r.findings}};
}

AblationReport ablation_from(const json& j) {
  AblationReport r;
  r.preset = j.at("preset").get<std::string>();
  r.search = j.at("search").get<std::string>();
  r.baseline_success_rate = j.at("baseline_success_rate").get<double>();
  for (const auto& row : j.at("rows")) {
    r.rows.push_back(AblationRow{row.at("removed").get<std::string>(),
                                 row.at("success_rate").get<double>(),
                                 row.at("delta").get<double>(),
                                 row.at("mean_queries").get<double>()});
  }
  r.findings = j.at("findings").get<std::vector<std::string>>();
  return r;
}

json body(const ComparisonReport& r) {
  json cells = json::array();
  for (const auto& c : r.cells) {
    cells.push_back({{"preset", c.preset},
                     {"search", c.search},
                     {"attempted", c.attempted},
                     {"skipped", c.skipped},
                     {"successes", c.successes},
                     {"attack_success_rate", c.attack_success_rate},
                     {"mean_perturbed_word_pct", c.mean_perturbed_word_pct},
                     {"mean_queries", c.mean_queries}});
  }
  return json{{"presets", r.presets}, {"searches", r.searches}, {"cells", cells}};
}

ComparisonReport comparison_from(const json& j) {
  ComparisonReport r;
  r.presets = j.at("presets").get<std::vector<std::string>>();
  r.searches = j.at("searches").get<std::vector<std::string>>();
  for (const auto& c : j.at("cells")) {
    r.cells.push_back(ComparisonCell{
        c.at("preset").get<std::string>(), c.at("search").get<std::string>(),
        c.at("attempted").get<std::size_t>(), c.at("skipped").get<std::size_t>(),
        c.at("successes").get<std::size_t>(), c.at("attack_success_rate").get<double>(),
        c.at("mean_perturbed_word_pct").get<double>(), c.at("mean_queries").get<double>()});
  }
  return r;
}

json body(const AugmentReport& r) {
  json runs = json::array();
  for (const auto& run : r.runs) {
    runs.push_back({{"seed", run.seed},
                    {"successes", run.successes},
                    {"augmented_size", run.augmented_size},
                    {"original_accuracy", run.original_accuracy},
                    {"augmented_accuracy", run.augmented_accuracy}});
  }
  return json{{"epochs", r.epochs},
              {"train_size", r.train_size},
              {"runs", runs},
              {"original_mean", r.original_mean},
              {"original_std", r.original_std},
              {"augmented_mean", r.augmented_mean},
              {"augmented_std", r.augmented_std},
              {"zero_successes", r.zero_successes}};
}

AugmentReport augment_from(const json& j) {
  AugmentReport r;
  r.epochs = j.at("epochs").get<std::size_t>();
  r.train_size = j.at("train_size").get<std::size_t>();
  for (const auto& run : j.at("runs")) {
    r.runs.push_back(AugmentRun{run.at("seed").get<std::uint64_t>(),
                                run.at("successes").get<std::size_t>(),
                                run.at("augmented_size").get<std::size_t>(),
                                run.at("original_accuracy").get<std::vector<double>>(),
                                run.at("augmented_accuracy").get<std::vector<double>>()});
  }
  r.original_mean = j.at("original_mean").get<std::vector<double>>();
  r.original_std = j.at("original_std").get<std::vector<double>>();
  r.augmented_mean = j.at("augmented_mean").get<std::vector<double>>();
  r.augmented_std = j.at("augmented_std").get<std::vector<double>>();
  r.zero_successes = j.at("zero_successes").get<bool>();
  return r;
}

json body(const SuspicionReport& r) {
  return json{{"accuracy", r.accuracy},     {"real_count", r.real_count},
              {"perturbed_count", r.perturbed_count}, {"train_size", r.train_size},
              {"test_size", r.test_size},   {"rebalanced", r.rebalanced},
              {"note", r.note}};
}

SuspicionReport suspicion_from(const json& j) {
  SuspicionReport r;
  r.accuracy = j.at("accuracy").get<double>();
  r.real_count = j.at("real_count").get<std::size_t>();
  r.perturbed_count = j.at("perturbed_count").get<std::size_t>();
  r.train_size = j.at("train_size").get<std::size_t>();
  r.test_size = j.at("test_size").get<std::size_t>();
  r.rebalanced = j.at("rebalanced").get<bool>();
  r.note = j.at("note").get<std::string>();
  return r;
}

json body(const GrammarEvalReport& r) {
  json pairs = json::array();
  for (const auto& p : r.pairs) {
    pairs.push_back({{"original", p.original},
                     {"perturbed", p.perturbed},
                     {"errors_before", p.errors_before},
                     {"errors_after", p.errors_after},
                     {"delta", p.delta},
                     {"new_rules", p.new_rules}});
  }
  return json{{"pairs", pairs}, {"positive", r.positive}, {"positive_pct", r.positive_pct}};
}

GrammarEvalReport grammar_from(const json& j) {
  GrammarEvalReport r;
  for (const auto& p : j.at("pairs")) {
    r.pairs.push_back(GrammarPair{p.at("original").get<std::string>(),
                                  p.at("perturbed").get<std::string>(),
                                  p.at("errors_before").get<int>(), p.at("errors_after").get<int>(),
                                  p.at("delta").get<int>(),
                                  p.at("new_rules").get<std::vector<std::string>>()});
  }
  r.positive = j.at("positive").get<std::size_t>();
  r.positive_pct = j.at("positive_pct").get<double>();
  return r;
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string md_cell(std::string s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c == '\n' ? ' ' : c;
  }
  return out;
}

class CsvWriter {
 public:
  explicit CsvWriter(std::vector<std::string> header) {
    header.insert(header.begin(), "csv_version");
    row_raw(header);
  }
  template <typename... Ts>
  void row(const Ts&... fields) {
    std::vector<std::string> v{std::to_string(kCsvFormatVersion), to_s(fields)...};
    row_raw(v);
  }
  std::string str() const { return out_.str(); }

 private:
  static std::string to_s(const std::string& s) { return s; }
  static std::string to_s(const char* s) { return s; }
  static std::string to_s(double v) { return json(v).dump(); }
  static std::string to_s(bool v) { return v ? "true" : "false"; }
  template <typename T>
  static std::string to_s(const std::optional<T>& v) {
    return v ? to_s(*v) : std::string();
  }
  template <typename T>
    requires std::is_integral_v<T>
  static std::string to_s(T v) {
    return std::to_string(v);
  }
  void row_raw(const std::vector<std::string>& v) {
    for (std::size_t i = 0; i < v.size(); ++i) out_ << (i ? "," : "") << csv_field(v[i]);
    out_ << "\n";
  }
  std::ostringstream out_;
};

std::string csv(const CampaignReport& r) {
  CsvWriter w({"index", "status", "original_label", "final_label", "queries", "swap_count",
               "perturbed_word_pct", "grammar_error_delta", "original_text", "adversarial_text",
               "detail"});
  for (const auto& e : r.per_example) {
    w.row(e.index, std::string(status_name(e.status)), e.original_label, e.final_label, e.queries,
          e.swap_count, e.perturbed_word_pct, e.grammar_error_delta, e.original_text,
          e.adversarial_text, e.detail);
  }
  return w.str();
}

std::string csv(const AblationReport& r) {
  CsvWriter w({"preset", "search", "removed", "success_rate", "delta", "mean_queries"});
  w.row(r.preset, r.search, "", r.baseline_success_rate, 0.0, 0.0);
  for (const auto& row : r.rows) {
    w.row(r.preset, r.search, row.removed, row.success_rate, row.delta, row.mean_queries);
  }
  return w.str();
}

std::string csv(const ComparisonReport& r) {
  CsvWriter w({"preset", "search", "attempted", "skipped", "successes", "attack_success_rate",
               "mean_perturbed_word_pct", "mean_queries"});
  for (const auto& c : r.cells) {
    w.row(c.preset, c.search, c.attempted, c.skipped, c.successes, c.attack_success_rate,
          c.mean_perturbed_word_pct, c.mean_queries);
  }
  return w.str();
}

std::string csv(const AugmentReport& r) {
  CsvWriter w({"epoch", "original_mean", "original_std", "augmented_mean", "augmented_std"});
  for (std::size_t e = 0; e < r.original_mean.size(); ++e) {
    w.row(e + 1, r.original_mean[e], r.original_std[e], r.augmented_mean[e], r.augmented_std[e]);
  }
  return w.str();
}

std::string csv(const SuspicionReport& r) {
  CsvWriter w({"accuracy", "real_count", "perturbed_count", "train_size", "test_size",
               "rebalanced", "note"});
  w.row(r.accuracy, r.real_count, r.perturbed_count, r.train_size, r.test_size, r.rebalanced,
        r.note);
  return w.str();
}

std::string csv(const GrammarEvalReport& r) {
  CsvWriter w({"original", "perturbed", "errors_before", "errors_after", "delta", "new_rules"});
  for (const auto& p : r.pairs) {
    std::string rules;
    for (const auto& id : p.new_rules) rules += (rules.empty() ? "" : ";") + id;
    w.row(p.original, p.perturbed, p.errors_before, p.errors_after, p.delta, rules);
  }
  return w.str();
}

std::string md(const CampaignReport& r) {
  std::ostringstream o;
  o << "# Attack campaign: " << r.preset << " / " << r.search << "\n\n";
  o << "| Metric | Value |\n|---|---|\n";
  o << "| Seeds attempted | " << r.attempted << " |\n";
  o << "| Skipped (misclassified) | " << r.skipped << " |\n";
  o << "| Successes | " << r.successes << " |\n";
  o << "| Budget exhausted | " << r.budget_exhausted << " |\n";
  o << "| Attack success % | " << num(r.attack_success_rate) << (r.skipped_all ? " (all skipped)" : "")
    << " |\n";
  o << "| After-attack accuracy % | " << num(r.after_attack_accuracy) << " |\n";
  o << "| Perturbed word % | " << num(r.mean_perturbed_word_pct) << " |\n";
  o << "| Num queries | " << num(r.mean_queries) << " |\n";
  if (r.grammar_error_pct) o << "| Grammatical error % | " << num(*r.grammar_error_pct) << " |\n";
  if (!r.per_example.empty()) {
    o << "\n## Examples\n\n| # | Status | Queries | Original | Adversarial |\n|---|---|---|---|---|\n";
    for (const auto& e : r.per_example) {
      o << "| " << e.index << " | " << status_name(e.status) << " | " << e.queries << " | "
        << md_cell(e.original_text) << " | " << md_cell(e.adversarial_text.value_or("")) << " |\n";
    }
  }
  return o.str();
}

std::string md(const AblationReport& r) {
  std::ostringstream o;
  o << "# Constraint ablation: " << r.preset << " / " << r.search << "\n\n";
  o << "| Constraint removed | Attack success % | Change |\n|---|---|---|\n";
  o << "| (none) | " << num(r.baseline_success_rate) << " | |\n";
  for (const auto& row : r.rows) {
    o << "| " << row.removed << " | " << num(row.success_rate) << " | "
      << (row.delta >= 0 ? "+" : "") << num(row.delta) << " |\n";
  }
  if (!r.findings.empty()) {
    o << "\n";
    for (const auto& f : r.findings) o << "- " << f << "\n";
  }
  return o.str();
}

std::string md(const ComparisonReport& r) {
  std::ostringstream o;
  o << "# Search comparison\n\n| Search";
  for (const auto& p : r.presets) o << " | " << p << " success % | " << p << " perturbed % | " << p << " queries";
  o << " |\n|---";
  for (std::size_t i = 0; i < r.presets.size(); ++i) o << "|---|---|---";
  o << "|\n";
  for (const auto& s : r.searches) {
    o << "| " << s;
    for (const auto& p : r.presets) {
      const ComparisonCell* c = r.cell(p, s);
      if (c) {
        o << " | " << num(c->attack_success_rate) << " | " << num(c->mean_perturbed_word_pct)
          << " | " << num(c->mean_queries);
      } else {
        o << " | | | ";
      }
    }
    o << " |\n";
  }
  return o.str();
}

std::string md(const AugmentReport& r) {
  std::ostringstream o;
  o << "# Adversarial training\n\n";
  o << "| Run seed | Adversarial examples | Augmented size |\n|---|---|---|\n";
  for (const auto& run : r.runs) {
    o << "| " << run.seed << " | " << run.successes << " | " << run.augmented_size << " |\n";
  }
  if (r.zero_successes) o << "\nSome runs found no adversarial examples; their trajectories coincide.\n";
  o << "\n| Epoch | Original acc % | Augmented acc % |\n|---|---|---|\n";
  for (std::size_t e = 0; e < r.original_mean.size(); ++e) {
    o << "| " << e + 1 << " | " << num(r.original_mean[e]) << " ± " << num(r.original_std[e])
      << " | " << num(r.augmented_mean[e]) << " ± " << num(r.augmented_std[e]) << " |\n";
  }
  return o.str();
}

std::string md(const SuspicionReport& r) {
  std::ostringstream o;
  o << "# Real versus perturbed classifier\n\n| Metric | Value |\n|---|---|\n";
  o << "| Held-out accuracy % | " << num(r.accuracy) << " |\n";
  o << "| Real texts | " << r.real_count << " |\n";
  o << "| Perturbed texts | " << r.perturbed_count << " |\n";
  o << "| Train / test | " << r.train_size << " / " << r.test_size << " |\n";
  if (r.rebalanced) o << "\n" << r.note << "\n";
  return o.str();
}

std::string md(const GrammarEvalReport& r) {
  std::ostringstream o;
  o << "# Grammar check\n\n" << r.positive << " of " << r.pairs.size()
    << " pairs gain errors (" << num(r.positive_pct) << "%).\n\n";
  o << "| Original | Perturbed | Before | After | Delta |\n|---|---|---|---|---|\n";
  for (const auto& p : r.pairs) {
    o << "| " << md_cell(p.original) << " | " << md_cell(p.perturbed) << " | " << p.errors_before
      << " | " << p.errors_after << " | " << p.delta << " |\n";
  }
  return o.str();
}

}  // namespace

ReportFormat parse_report_format(std::string_view name) {
  if (name == "json") return ReportFormat::kJson;
  if (name == "csv") return ReportFormat::kCsv;
  if (name == "markdown" || name == "md") return ReportFormat::kMarkdown;
  throw ConfigError("unknown report format '" + std::string(name) +
                    "'; valid formats: json, csv, markdown");
}

std::string_view report_kind(const Report& report) {
  struct {
    std::string_view operator()(const CampaignReport&) const { return "campaign"; }
    std::string_view operator()(const AblationReport&) const { return "ablation"; }
    std::string_view operator()(const ComparisonReport&) const { return "comparison"; }
    std::string_view operator()(const AugmentReport&) const { return "augment"; }
    std::string_view operator()(const SuspicionReport&) const { return "suspicion"; }
    std::string_view operator()(const GrammarEvalReport&) const { return "grammar"; }
  } v;
  return std::visit(v, report);
}

json report_to_json(const Report& report) {
  json j = std::visit([](const auto& r) { return body(r); }, report);
  j["kind"] = std::string(report_kind(report));
  j["format_version"] = kReportFormatVersion;
  return j;
}

Report report_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
    throw FormatError("report has no 'kind'");
  }
  if (j.value("format_version", 0) != kReportFormatVersion) {
    throw FormatError("unsupported report format_version");
  }
  const std::string kind = j["kind"].get<std::string>();
  try {
    if (kind == "campaign") return campaign_from(j);
    if (kind == "ablation") return ablation_from(j);
    if (kind == "comparison") return comparison_from(j);
    if (kind == "augment") return augment_from(j);
    if (kind == "suspicion") return suspicion_from(j);
    if (kind == "grammar") return grammar_from(j);
  } catch (const json::exception& e) {
    throw FormatError("malformed " + kind + " report: " + e.what());
  }
  throw FormatError("unknown report kind '" + kind + "'");
}

std::string render_json(const Report& report) { return report_to_json(report).dump(2) + "\n"; }

std::string render_csv(const Report& report) {
  return std::visit([](const auto& r) { return csv(r); }, report);
}

std::string render_markdown(const Report& report) {
  return std::visit([](const auto& r) { return md(r); }, report);
}

std::string render(const Report& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::kJson: return render_json(report);
    case ReportFormat::kCsv: return render_csv(report);
    case ReportFormat::kMarkdown: return render_markdown(report);
  }
  return render_json(report);
}

void write_report(const Report& report, ReportFormat format, const std::filesystem::path& path) {
  const std::string text = render(report, format);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write report to '" + path.string() + "'");
  out << text;
  out.flush();
  if (!out) throw IoError("failed writing report to '" + path.string() + "'");
}

Report read_report(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open report '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  json j;
  try {
    j = json::parse(ss.str());
  } catch (const json::parse_error& e) {
    throw FormatError("report '" + path.string() + "' is not JSON: " + e.what());
  }
  return report_from_json(j);
}

}  // namespace advtext
