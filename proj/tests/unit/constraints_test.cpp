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

#include "advtext/constraints.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <fstream>
#include <sstream>

#include "advtext/encoder.hpp"
#include "advtext/errors.hpp"
#include "advtext/recipe.hpp"
#include "advtext/search.hpp"
#include "fixtures.hpp"

namespace advtext {
namespace {

using testing::Toy;
using testing::toy;

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST(Encoder, MeanEmbeddingIsUnitAndFallsBack) {
  const Toy& t = toy();
  auto v = t.encoder->encode(tokenize("a riveting movie"));
  EXPECT_NEAR(norm(v), 1.0, 1e-12);
  auto e = t.encoder->encode(tokenize("qqqq zzzz"));
  EXPECT_DOUBLE_EQ(e[0], 1.0);
  EXPECT_NEAR(norm(e), 1.0, 1e-12);
  EXPECT_THROW(MeanEmbeddingEncoder(std::make_shared<const EmbeddingStore>(
                   parse_embeddings("1 2\na 3 4\n"))),
               ConfigError);
}

TEST(Encoder, SimilarityOfIdenticalTextsIsOne) {
  const Toy& t = toy();
  auto x = tokenize("the movie is chaotic");
  EXPECT_NEAR(sentence_similarity(*t.encoder, x, x), 1.0, 1e-12);
  EXPECT_DOUBLE_EQ(windowed_sentence_similarity(*t.encoder, x, x, 1), 1.0);
}

TEST(Encoder, WindowOnlySeesNeighborhood) {
  const Toy& t = toy();
  auto x = tokenize("the movie is chaotic and the trip is wry");
  auto y = x.with_tokens({"the", "movie", "is", "muddled", "and", "the", "trip", "is", "wry"});
  auto xw = x.window(2, 5), yw = y.window(2, 5);
  double want = cosine(t.encoder->encode(xw), t.encoder->encode(yw));
  EXPECT_NEAR(windowed_sentence_similarity(*t.encoder, x, y, 1), want, 1e-12);
  EXPECT_THROW(windowed_sentence_similarity(*t.encoder, x, tokenize("the movie"), 1),
               LengthMismatch);
}

TEST(Constraints, IdentityPassesEveryConstraint) {
  const Toy& t = toy();
  auto res = t.resources();
  std::vector<std::shared_ptr<const Constraint>> all = {
      std::make_shared<WordEmbeddingDistance>(t.store, 0.99),
      std::make_shared<PartOfSpeechConsistency>(t.lexicon),
      std::make_shared<StopwordModification>(),
      std::make_shared<SentenceEncoderSimilarity>(t.encoder, 0.999),
      std::make_shared<SentenceEncoderSimilarity>(t.encoder, 0.999, 2),
      std::make_shared<GrammarErrorBound>(t.lexicon, 0),
      std::make_shared<MaxWordsPerturbed>(0),
      std::make_shared<EditDistanceLimit>(0)};
  for (const auto& s : t.test.samples) {
    for (const auto& c : all) {
      EXPECT_TRUE(c->check(s.text, s.text, {}).passed) << c->id() << ": " << s.text.text();
    }
  }
}

TEST(Constraints, WordEmbeddingThreshold) {
  auto store = testing::make_store({{"good", {1, 0}}, {"fine", {0.95, 0.3122}}, {"ok", {1, 1}}});
  WordEmbeddingDistance c(store, 0.9);
  auto x = tokenize("good");
  EXPECT_TRUE(c.check_swap(x, {0, "good", "fine"}).passed);
  auto v = c.check_swap(x, {0, "good", "ok"});
  EXPECT_FALSE(v.passed);
  EXPECT_NEAR(*v.score, std::sqrt(0.5), 1e-9);
  EXPECT_FALSE(c.check_swap(x, {0, "good", "unknown"}).passed);
}

TEST(Constraints, PartOfSpeechUsesFamilies) {
  const Toy& t = toy();
  PartOfSpeechConsistency c(t.lexicon);
  auto x = tokenize("a riveting movie");
  EXPECT_TRUE(c.check_swap(x, {1, "riveting", "baffling"}).passed);
  EXPECT_TRUE(c.check_swap(x, {2, "movie", "movies"}).passed);
  EXPECT_FALSE(c.check_swap(x, {2, "movie", "riveting"}).passed);
}

TEST(Constraints, StopwordAndCounts) {
  StopwordModification sw;
  auto x = tokenize("the movie is good");
  EXPECT_FALSE(sw.check_swap(x, {0, "the", "a"}).passed);
  EXPECT_TRUE(sw.check_swap(x, {1, "movie", "film"}).passed);
  auto y = x.with_tokens({"the", "film", "is", "fine"});
  EXPECT_FALSE(MaxWordsPerturbed(1).check(x, y, swaps_between(x, y)).passed);
  EXPECT_TRUE(MaxWordsPerturbed(2).check(x, y, swaps_between(x, y)).passed);
  std::size_t d = levenshtein(x.text(), y.text());
  EXPECT_TRUE(EditDistanceLimit(d).check(x, y, {}).passed);
  EXPECT_FALSE(EditDistanceLimit(d - 1).check(x, y, {}).passed);
}

TEST(Constraints, GrammarBound) {
  const Toy& t = toy();
  GrammarErrorBound g(t.lexicon, 0);
  auto x = tokenize("they compare it");
  auto y = x.with_tokens({"they", "compares", "it"});
  EXPECT_FALSE(g.check(x, y, swaps_between(x, y)).passed);
  EXPECT_TRUE(GrammarErrorBound(t.lexicon, 1).check(x, y, {}).passed);
}

TEST(Constraints, PreviousStepReference) {
  const Toy& t = toy();
  ConstraintSet cs("w", {std::make_shared<SentenceEncoderSimilarity>(
                            t.encoder, 0.999, std::nullopt, CompareAgainst::kPreviousStep)});
  auto x = tokenize("the movie is chaotic");
  auto y = x.with_tokens({"the", "movie", "is", "muddled"});
  EXPECT_TRUE(cs.allows_text(x, y, y));
  EXPECT_EQ(cs.allows_text(x, x, y),
            sentence_similarity(*t.encoder, x, y) >= 0.999);
}

TEST(ConstraintSet, WithoutAndPresets) {
  auto res = toy().resources();
  ConstraintSet strict = make_preset("strict", res);
  EXPECT_EQ(strict.size(), 5u);
  EXPECT_EQ(*strict.min_word_cosine(), 0.9);
  ConstraintSet less = strict.without(1);
  EXPECT_EQ(less.size(), 4u);
  EXPECT_EQ(less.name(), "strict-sentence_encoder");
  EXPECT_THROW(strict.without(5), IndexError);
  EXPECT_EQ(make_preset("loose", res).size(), 3u);
  try {
    make_preset("medium", res);
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("loose, strict"), std::string::npos);
  }
}

TEST(ConstraintSet, StrictCandidatesAreLooseCandidates) {
  const Toy& t = toy();
  auto res = t.resources();
  ConstraintSet loose = make_preset("loose", res), strict = make_preset("strict", res);
  for (const auto& s : t.test.samples) {
    for (std::size_t i = 0; i < s.text.size(); ++i) {
      auto a = candidate_swaps(*t.store, strict, s.text, i);
      auto b = candidate_swaps(*t.store, loose, s.text, i);
      for (const auto& sw : a) {
        EXPECT_NE(std::find(b.begin(), b.end(), sw), b.end());
      }
    }
  }
}

class PresetGolden : public ::testing::TestWithParam<const char*> {};

TEST_P(PresetGolden, MatchesRecipeFile) {
  AttackRecipe r = make_recipe(GetParam(), SearchMethod::kGreedy, toy().resources());
  auto want = nlohmann::json::parse(
      slurp(testing::golden_dir() / (std::string("preset_") + GetParam() + ".json")));
  EXPECT_EQ(recipe_to_json(r), want);
}

INSTANTIATE_TEST_SUITE_P(Presets, PresetGolden, ::testing::Values("loose", "strict"));

TEST(Recipe, JsonRoundTrip) {
  auto res = toy().resources();
  for (auto m : {SearchMethod::kGreedy, SearchMethod::kGenetic, SearchMethod::kExhaustive}) {
    AttackRecipe r = make_recipe("strict", m, res);
    r.query_budget = 123;
    auto j = recipe_to_json(r);
    EXPECT_EQ(recipe_to_json(recipe_from_json(j, res)), j);
  }
}

TEST(Recipe, RejectsUnknownKeys) {
  auto res = toy().resources();
  EXPECT_THROW(recipe_from_json(nlohmann::json{{"preset", "loose"}, {"colour", 1}}, res),
               ConfigError);
  EXPECT_THROW(recipe_from_json(nlohmann::json::parse(
                                    R"({"constraints":[{"type":"word_embedding","min":1}]})"),
                                res),
               ConfigError);
  EXPECT_THROW(recipe_from_json(nlohmann::json{{"search", "beam"}}, res), ConfigError);
}

TEST(Recipe, ExplicitConstraintList) {
  auto res = toy().resources();
  auto r = recipe_from_json(nlohmann::json::parse(R"({
    "constraints": [{"type": "max_words_perturbed", "max_words": 2},
                    {"type": "levenshtein", "max_distance": 9},
                    {"type": "sentence_encoder", "min_sim": 0.5, "window_radius": 3,
                     "compare_against": "previous_step"}],
    "search": {"id": "genetic", "population_size": 8, "generations": 2}})"),
                            res);
  ASSERT_EQ(r.constraints.size(), 3u);
  EXPECT_EQ(r.constraints.constraints()[2]->compares_against(), CompareAgainst::kPreviousStep);
  EXPECT_EQ(r.search.method, SearchMethod::kGenetic);
  EXPECT_EQ(r.search.genetic.population_size, 8u);
}

}  // namespace
}  // namespace advtext
