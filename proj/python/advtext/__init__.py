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

"""Word-substitution adversarial attacks on text classifiers."""

import json

from ._core import (
    AdvtextError,
    ConfigError,
    FormatError,
    Workspace,
    euclidean_threshold_from_cosine,
    grammar_errors,
    levenshtein,
    neighbors,
    presets,
    run_cli,
    search_methods,
    tokenize,
)


def attack_report(workspace, dataset, **kwargs):
    """Runs Workspace.attack and parses the JSON report."""
    return json.loads(workspace.attack(str(dataset), **kwargs))


__all__ = [
    "AdvtextError",
    "ConfigError",
    "FormatError",
    "Workspace",
    "attack_report",
    "euclidean_threshold_from_cosine",
    "grammar_errors",
    "levenshtein",
    "neighbors",
    "presets",
    "run_cli",
    "search_methods",
    "tokenize",
]
