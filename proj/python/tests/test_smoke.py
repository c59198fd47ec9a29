# Copyright 2026 The advtext Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import json
import math
import pathlib

import pytest

import advtext

DATA = pathlib.Path(__file__).resolve().parents[2] / "data"
EMB = str(DATA / "toy_embeddings.txt")
LEX = str(DATA / "lexicon.tsv")


@pytest.fixture(scope="module")
def workspace():
    ws = advtext.Workspace(EMB, LEX)
    assert ws.train(str(DATA / "toy_train.jsonl")) >= 75.0
    return ws


def test_tokenize_and_distance():
    assert advtext.tokenize("A riveting ride.") == ["a", "riveting", "ride", "."]
    assert advtext.levenshtein("kitten", "sitting") == 3
    assert math.isclose(advtext.euclidean_threshold_from_cosine(0.5), 1.0)


def test_registries():
    assert advtext.presets() == ["loose", "strict"]
    assert "exhaustive" in advtext.search_methods()


def test_grammar_rule_fires():
    assert advtext.grammar_errors(LEX, "they does it") == ["NON3PRS_VERB"]
    assert advtext.grammar_errors(LEX, "they do it") == []


def test_neighbors_sorted():
    got = advtext.neighbors(EMB, "riveting", k=5, min_cos=0.5)
    assert got
    cosines = [c for _, c in got]
    assert cosines == sorted(cosines, reverse=True)
    assert all(c >= 0.5 for c in cosines)


def test_predict_and_evaluate(workspace):
    p = workspace.predict("a riveting and gripping trip")
    assert len(p) == 2 and math.isclose(sum(p), 1.0)
    assert workspace.evaluate(str(DATA / "toy_test.jsonl")) >= 75.0


def test_attack_report(workspace):
    rep = advtext.attack_report(workspace, DATA / "toy_test.jsonl", preset="loose", limit=8)
    assert rep["kind"] == "campaign"
    assert rep["attempted"] == 8
    assert rep["successes"] >= 1
    strict = advtext.attack_report(workspace, DATA / "toy_test.jsonl", preset="strict", limit=8)
    assert strict["attack_success_rate"] <= rep["attack_success_rate"]


def test_errors_map_to_exceptions(workspace):
    with pytest.raises(advtext.ConfigError):
        workspace.attack(str(DATA / "toy_test.jsonl"), preset="medium")
    fresh = advtext.Workspace(EMB, LEX)
    with pytest.raises(advtext.ConfigError):
        fresh.predict("anything")


def test_run_cli_help():
    code, out, _ = advtext.run_cli(["--help"])
    assert code == 0
    assert "attack" in out
    code, _, err = advtext.run_cli(["attack"])
    assert code == 1 and err
