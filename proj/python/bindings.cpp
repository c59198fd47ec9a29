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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

#include "advtext/dataset.hpp"
#include "advtext/errors.hpp"
#include "advtext/grammar.hpp"
#include "advtext/harness.hpp"
#include "advtext/recipe.hpp"
#include "advtext/report.hpp"
#include "cli.hpp"

namespace py = pybind11;
using namespace advtext;

namespace {

// Everything an attack needs, loaded from a bundled-style asset set.
struct Workspace {
  LanguageResources res;
  std::shared_ptr<const BagOfEmbeddingsClassifier> model;

  static Workspace open(const std::filesystem::path& embeddings,
                        const std::filesystem::path& lexicon) {
    Workspace w;
    auto store = std::make_shared<const EmbeddingStore>(normalize(load_embeddings(embeddings)));
    w.res = {store, std::make_shared<const PosLexicon>(PosLexicon::load(lexicon)),
             std::make_shared<const MeanEmbeddingEncoder>(store)};
    return w;
  }

  double train_on(const std::filesystem::path& dataset, std::size_t epochs) {
    Dataset d = load_dataset(dataset, infer_dataset_format(dataset));
    TrainHyper h;
    h.epochs = epochs;
    model = std::make_shared<const BagOfEmbeddingsClassifier>(train(d.samples, res.store, h));
    return accuracy(*model, d.samples);
  }

  void require_model() const {
    if (!model) throw ConfigError("no victim model; call train() first");
  }

  std::vector<double> predict(const std::string& text) const {
    require_model();
    return model->predict_proba(tokenize(text));
  }

  double evaluate(const std::filesystem::path& dataset) const {
    require_model();
    return accuracy(*model, load_dataset(dataset, infer_dataset_format(dataset)).samples);
  }

  std::string attack(const std::filesystem::path& dataset, const std::string& preset,
                     const std::string& search, std::optional<std::size_t> limit,
                     std::uint64_t seed, std::size_t workers) const {
    require_model();
    Dataset d = load_dataset(dataset, infer_dataset_format(dataset));
    if (limit && *limit < d.samples.size()) d.samples.resize(*limit);
    AttackRecipe r = make_recipe(preset, parse_search(search), res);
    CampaignOptions o;
    o.rng_seed = seed;
    o.workers = workers;
    o.lexicon = res.lexicon.get();
    return render_json(run_campaign(*model, r, d.samples, o));
  }
};

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Word-substitution adversarial attacks on text classifiers";

  py::register_exception<Error>(m, "AdvtextError");
  py::register_exception<ConfigError>(m, "ConfigError");
  py::register_exception<FormatError>(m, "FormatError");

  m.def("tokenize", [](const std::string& text) { return tokenize(text).tokens(); },
        py::arg("text"));
  m.def("levenshtein", [](const std::string& a, const std::string& b) { return levenshtein(a, b); });
  m.def("euclidean_threshold_from_cosine", &euclidean_threshold_from_cosine, py::arg("eps"));
  m.def("presets", &preset_names);
  m.def("search_methods", &search_names);
  m.def("grammar_errors",
        [](const std::filesystem::path& lexicon, const std::string& text) {
          std::vector<std::string> ids;
          for (const auto& r : check_grammar(PosLexicon::load(lexicon), tokenize(text))) {
            ids.push_back(r.rule_id);
          }
          return ids;
        },
        py::arg("lexicon"), py::arg("text"));
  m.def("neighbors",
        [](const std::filesystem::path& embeddings, const std::string& word, std::size_t k,
           double min_cos) {
          EmbeddingStore s = normalize(load_embeddings(embeddings));
          std::vector<std::pair<std::string, double>> out;
          for (const auto& n : nearest_neighbors(s, word, k, min_cos)) out.emplace_back(n.word, n.cosine);
          return out;
        },
        py::arg("embeddings"), py::arg("word"), py::arg("k") = 10, py::arg("min_cos") = -1.0);

  py::class_<Workspace>(m, "Workspace")
      .def(py::init(&Workspace::open), py::arg("embeddings"), py::arg("lexicon"))
      .def("train", &Workspace::train_on, py::arg("dataset"), py::arg("epochs") = 300,
           "Trains the victim and returns its training accuracy (percent).")
      .def("predict", &Workspace::predict, py::arg("text"))
      .def("evaluate", &Workspace::evaluate, py::arg("dataset"))
      .def("attack", &Workspace::attack, py::arg("dataset"), py::arg("preset") = "loose",
           py::arg("search") = "greedy", py::arg("limit") = py::none(), py::arg("seed") = 0,
           py::arg("workers") = 1, "Runs a campaign and returns the JSON report.");

  m.def("run_cli",
        [](const std::vector<std::string>& args) {
          std::vector<std::string> full = {"advtext"};
          full.insert(full.end(), args.begin(), args.end());
          std::vector<const char*> argv;
          for (const auto& a : full) argv.push_back(a.c_str());
          std::ostringstream out, err;
          int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
          return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Runs the command line tool in-process; returns (code, stdout, stderr).");
}
