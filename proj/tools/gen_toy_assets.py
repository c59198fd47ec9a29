#!/usr/bin/env python3
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
"""Generates the bundled toy assets under data/.

Writes three files, all deterministic for a fixed --seed:

  toy_embeddings.txt  word2vec text format, planted synonym clusters
  lexicon.tsv         word<TAB>TAG1,TAG2 part-of-speech lexicon
  toy_train.jsonl / toy_test.jsonl   two-class sentiment samples

Each cluster shares a topic direction. Members carry a signed sentiment
intensity along one global axis, so same-sign members are tight neighbours
(cosine > 0.9) while opposite-sign members are loose ones (0.5 - 0.9).
Verb and noun inflections add a shared offset per inflection, which makes
an inflection swap a loose neighbour that keeps the coarse part of speech.
"""

import argparse
import json
import pathlib

import numpy as np

DIM = 50
SENTIMENT_GAIN = 0.5
INFLECTION_GAIN = 0.75
NOISE = 0.02  # per-dimension stddev

# (word, sign, intensity); sign 0 is neutral.
ADJ_GROUPS = [
    [("riveting", 1, 1.0), ("gripping", 1, 0.9), ("engrossing", 1, 0.8), ("absorbing", 1, 0.7),
     ("compelling", 1, 0.8), ("captivating", 1, 0.9),
     ("baffling", -1, 0.8), ("puzzling", -1, 0.7), ("perplexing", -1, 0.9), ("confusing", -1, 1.0)],
    [("excellent", 1, 1.0), ("superb", 1, 1.0), ("outstanding", 1, 0.9), ("terrific", 1, 0.9),
     ("wonderful", 1, 0.9), ("great", 1, 0.8), ("good", 1, 0.6), ("fine", 1, 0.4), ("decent", 1, 0.4),
     ("mediocre", -1, 0.5), ("poor", -1, 0.7), ("lousy", -1, 0.9), ("awful", -1, 1.0)],
    [("romantic", 1, 0.7), ("tender", 1, 0.8), ("sweet", 1, 0.6), ("charming", 1, 0.9),
     ("sentimental", -1, 0.5), ("sappy", -1, 0.8), ("mawkish", -1, 0.9), ("saccharine", -1, 0.9)],
    [("funny", 1, 0.8), ("hilarious", 1, 1.0), ("witty", 1, 0.9), ("amusing", 1, 0.7), ("clever", 1, 0.8),
     ("silly", -1, 0.6), ("goofy", -1, 0.6), ("juvenile", -1, 0.9), ("inane", -1, 1.0)],
    [("beautiful", 1, 0.9), ("gorgeous", 1, 1.0), ("stunning", 1, 1.0), ("lovely", 1, 0.8), ("elegant", 1, 0.7),
     ("garish", -1, 0.8), ("gaudy", -1, 0.8), ("ugly", -1, 1.0), ("drab", -1, 0.6)],
    [("smart", 1, 0.8), ("intelligent", 1, 0.9), ("thoughtful", 1, 0.8), ("insightful", 1, 1.0),
     ("pretentious", -1, 0.9), ("smug", -1, 0.8), ("muddled", -1, 0.8), ("shallow", -1, 0.9)],
    [("lively", 1, 0.7), ("energetic", 1, 0.8), ("vibrant", 1, 0.9), ("brisk", 1, 0.6),
     ("frantic", -1, 0.7), ("hectic", -1, 0.6), ("chaotic", -1, 0.8), ("manic", -1, 0.8)],
    [("moving", 1, 0.9), ("touching", 1, 0.9), ("poignant", 1, 1.0), ("heartfelt", 1, 0.8),
     ("maudlin", -1, 0.9), ("weepy", -1, 0.7), ("cloying", -1, 0.9), ("syrupy", -1, 0.8)],
    [("fresh", 1, 0.8), ("original", 1, 0.9), ("inventive", 1, 1.0), ("novel", 1, 0.7),
     ("stale", -1, 0.8), ("derivative", -1, 0.9), ("tired", -1, 0.7), ("hackneyed", -1, 1.0)],
    [("grating", -1, 0.9), ("irritating", -1, 1.0), ("annoying", -1, 0.9), ("abrasive", -1, 0.8),
     ("soothing", 1, 0.6), ("calming", 1, 0.5), ("gentle", 1, 0.6), ("mellow", 1, 0.5)],
    [("lanky", 0, 0.0), ("gangly", 0, 0.0), ("spindly", 0, 0.0), ("lean", 0, 0.0)],
    [("emaciated", -1, 0.6), ("gaunt", -1, 0.6), ("skeletal", -1, 0.7), ("haggard", -1, 0.8),
     ("slender", 1, 0.4), ("slim", 1, 0.4), ("svelte", 1, 0.5)],
    [("long", 0, 0.0), ("lengthy", 0, 0.0), ("extended", 0, 0.0), ("prolonged", 0, 0.0)],
    [("dull", -1, 0.9), ("boring", -1, 1.0), ("tedious", -1, 1.0), ("bland", -1, 0.7), ("flat", -1, 0.6),
     ("engaging", 1, 0.8), ("entertaining", 1, 0.9), ("enjoyable", 1, 0.8), ("fun", 1, 0.7)],
    [("wry", 0, 0.0), ("sardonic", 0, 0.0), ("droll", 0, 0.0), ("ironic", 0, 0.0)],
    [("appreciative", 1, 0.5), ("grateful", 1, 0.5), ("thankful", 1, 0.5)],
    [("ok", 0, 0.0), ("okay", 0, 0.0), ("passable", 0, 0.0), ("adequate", 0, 0.0)],
]

ADV_GROUPS = [
    [("surprisingly", 0, 0.0), ("remarkably", 0, 0.0), ("unexpectedly", 0, 0.0), ("strikingly", 0, 0.0)],
    [("really", 0, 0.0), ("truly", 0, 0.0), ("genuinely", 0, 0.0), ("honestly", 0, 0.0)],
    [("very", 0, 0.0), ("extremely", 0, 0.0), ("incredibly", 0, 0.0), ("exceptionally", 0, 0.0)],
    [("beautifully", 1, 0.9), ("brilliantly", 1, 1.0), ("wonderfully", 1, 0.9), ("superbly", 1, 1.0),
     ("clumsily", -1, 0.8), ("poorly", -1, 0.9), ("badly", -1, 1.0), ("awkwardly", -1, 0.8)],
    [("slightly", 0, 0.0), ("somewhat", 0, 0.0), ("mildly", 0, 0.0), ("vaguely", 0, 0.0)],
    [("anyway", 0, 0.0), ("anyhow", 0, 0.0), ("nonetheless", 0, 0.0), ("regardless", 0, 0.0)],
]

# (singular, plural) pairs; sign per group member.
NOUN_GROUPS = [
    [("movie", "movies", 0, 0.0), ("film", "films", 0, 0.0), ("picture", "pictures", 0, 0.0),
     ("flick", "flicks", 0, 0.0), ("feature", "features", 0, 0.0)],
    [("story", "stories", 0, 0.0), ("plot", "plots", 0, 0.0), ("tale", "tales", 0, 0.0),
     ("narrative", "narratives", 0, 0.0), ("storyline", "storylines", 0, 0.0)],
    [("ride", "rides", 0, 0.0), ("journey", "journeys", 0, 0.0), ("trip", "trips", 0, 0.0),
     ("adventure", "adventures", 0, 0.0)],
    [("performance", "performances", 0, 0.0), ("portrayal", "portrayals", 0, 0.0),
     ("turn", "turns", 0, 0.0), ("role", "roles", 0, 0.0)],
    [("script", "scripts", 0, 0.0), ("screenplay", "screenplays", 0, 0.0), ("dialogue", "dialogues", 0, 0.0)],
    [("director", "directors", 0, 0.0), ("filmmaker", "filmmakers", 0, 0.0), ("auteur", "auteurs", 0, 0.0)],
    [("character", "characters", 0, 0.0), ("protagonist", "protagonists", 0, 0.0), ("hero", "heroes", 0, 0.0)],
    [("ending", "endings", 0, 0.0), ("finale", "finales", 0, 0.0), ("conclusion", "conclusions", 0, 0.0),
     ("climax", "climaxes", 0, 0.0)],
    [("soundtrack", "soundtracks", 0, 0.0), ("score", "scores", 0, 0.0), ("music", "musics", 0, 0.0)],
    [("comedy", "comedies", 0, 0.0), ("farce", "farces", 0, 0.0), ("satire", "satires", 0, 0.0)],
    [("drama", "dramas", 0, 0.0), ("melodrama", "melodramas", 0, 0.0), ("thriller", "thrillers", 0, 0.0)],
    [("scene", "scenes", 0, 0.0), ("sequence", "sequences", 0, 0.0), ("moment", "moments", 0, 0.0)],
    [("masterpiece", "masterpieces", 1, 1.0), ("triumph", "triumphs", 1, 0.9), ("gem", "gems", 1, 0.9),
     ("delight", "delights", 1, 0.8), ("treat", "treats", 1, 0.7),
     ("disaster", "disasters", -1, 1.0), ("mess", "messes", -1, 0.8), ("failure", "failures", -1, 0.9),
     ("flop", "flops", -1, 0.8), ("bore", "bores", -1, 0.7)],
    [("day", "days", 0, 0.0), ("afternoon", "afternoons", 0, 0.0), ("evening", "evenings", 0, 0.0)],
    [("family", "families", 0, 0.0), ("household", "households", 0, 0.0), ("clan", "clans", 0, 0.0)],
    [("job", "jobs", 0, 0.0), ("work", "works", 0, 0.0), ("effort", "efforts", 0, 0.0)],
    [("reading", "readings", 0, 0.0), ("recitation", "recitations", 0, 0.0), ("lecture", "lectures", 0, 0.0)],
    [("game", "games", 0, 0.0), ("match", "matches", 0, 0.0), ("contest", "contests", 0, 0.0)],
    [("grate", "grates", 0, 0.0), ("grille", "grilles", 0, 0.0), ("grid", "grids", 0, 0.0)],
    [("cast", "casts", 0, 0.0), ("ensemble", "ensembles", 0, 0.0), ("troupe", "troupes", 0, 0.0)],
    [("person", "persons", 0, 0.0), ("individual", "individuals", 0, 0.0), ("fellow", "fellows", 0, 0.0)],
    [("summer", "summers", 0, 0.0), ("winter", "winters", 0, 0.0), ("spring", "springs", 0, 0.0)],
    [("painting", "paintings", 0, 0.0), ("portrait", "portraits", 0, 0.0), ("depiction", "depictions", 0, 0.0)],
    [("coven", "covens", 0, 0.0), ("sect", "sects", 0, 0.0), ("cult", "cults", 0, 0.0)],
]

# (base, 3sg, past, gerund) tuples.
VERB_GROUPS = [
    [(("love", "loves", "loved", "loving"), 1, 1.0), (("adore", "adores", "adored", "adoring"), 1, 1.0),
     (("enjoy", "enjoys", "enjoyed", "enjoying"), 1, 0.8),
     (("appreciate", "appreciates", "appreciated", "appreciating"), 1, 0.7),
     (("tolerate", "tolerates", "tolerated", "tolerating"), -1, 0.6),
     (("dislike", "dislikes", "disliked", "disliking"), -1, 0.9),
     (("resent", "resents", "resented", "resenting"), -1, 1.0)],
    [(("recommend", "recommends", "recommended", "recommending"), 1, 0.9),
     (("praise", "praises", "praised", "praising"), 1, 1.0), (("applaud", "applauds", "applauded", "applauding"), 1, 0.9),
     (("criticize", "criticizes", "criticized", "criticizing"), -1, 0.9),
     (("condemn", "condemns", "condemned", "condemning"), -1, 1.0),
     (("dismiss", "dismisses", "dismissed", "dismissing"), -1, 0.8)],
    [(("compare", "compares", "compared", "comparing"), 0, 0.0), (("contrast", "contrasts", "contrasted", "contrasting"), 0, 0.0),
     (("liken", "likens", "likened", "likening"), 0, 0.0), (("equate", "equates", "equated", "equating"), 0, 0.0)],
    [(("watch", "watches", "watched", "watching"), 0, 0.0), (("see", "sees", "saw", "seeing"), 0, 0.0),
     (("view", "views", "viewed", "viewing"), 0, 0.0), (("witness", "witnesses", "witnessed", "witnessing"), 0, 0.0)],
    [(("make", "makes", "made", "making"), 0, 0.0), (("create", "creates", "created", "creating"), 0, 0.0),
     (("produce", "produces", "produced", "producing"), 0, 0.0), (("craft", "crafts", "crafted", "crafting"), 0, 0.0)],
    [(("tell", "tells", "told", "telling"), 0, 0.0), (("narrate", "narrates", "narrated", "narrating"), 0, 0.0),
     (("recount", "recounts", "recounted", "recounting"), 0, 0.0)],
    [(("want", "wants", "wanted", "wanting"), 0, 0.0), (("wish", "wishes", "wished", "wishing"), 0, 0.0),
     (("desire", "desires", "desired", "desiring"), 0, 0.0)],
    [(("know", "knows", "knew", "knowing"), 0, 0.0), (("understand", "understands", "understood", "understanding"), 0, 0.0),
     (("realize", "realizes", "realized", "realizing"), 0, 0.0)],
    [(("retrieve", "retrieves", "retrieved", "retrieving"), 0, 0.0), (("recover", "recovers", "recovered", "recovering"), 0, 0.0),
     (("fetch", "fetches", "fetched", "fetching"), 0, 0.0)],
    [(("paint", "paints", "painted", "painting_v"), 0, 0.0), (("draw", "draws", "drew", "drawing"), 0, 0.0),
     (("sketch", "sketches", "sketched", "sketching"), 0, 0.0)],
    [(("deliver", "delivers", "delivered", "delivering"), 0, 0.0), (("offer", "offers", "offered", "offering"), 0, 0.0),
     (("provide", "provides", "provided", "providing"), 0, 0.0)],
]

# Function words: embedded (so the victim sees them) but never swap targets.
FUNCTION_WORDS = {
    "PREP": ["to", "of", "in", "with", "for", "on", "at", "by", "from", "about", "like", "than",
             "after", "before", "into", "through", "over", "as", "while"],
    "OTHER": ["and", "but", "or", "yet", "so", "if", "not", "next", "thick", "gravest", "why",
              "anything", "everything", "nothing", "something", "just", "still", "only", "even",
              "too", "also", "ever", "never", "friday", "macdowell's", "borchardt's", "bartlett's",
              ",", ".", "!", "?", ";", ":", "--", "'s", "sentinel"],
    "VERB_3SG": ["is", "has", "does", "doesn't", "seems"],
    "VERB_BASE": ["are", "be", "have", "do", "don't", "seem"],
    "VERB_PAST": ["was", "were", "had", "did", "didn't", "been"],
    "VERB_GERUND": ["being", "having"],
    "ADJ": ["first", "last", "whole", "own", "other"],
    "NOUN": ["cinema", "series", "thing", "time", "way", "people"],
}
# Built into the tagger; listed here only so they are embedded.
CLOSED_CLASS = ["i", "me", "you", "he", "him", "she", "her", "it", "we", "us", "they", "them", "thee",
                "a", "an", "the", "this", "that", "these", "those", "my", "your", "his", "its", "our",
                "their", "some", "any", "every", "each", "can", "could", "may", "might", "must",
                "shall", "should", "will", "would", "can't", "cannot", "couldn't", "won't",
                "wouldn't", "shouldn't"]

SYLLABLES = ["ba", "ko", "ri", "mu", "te", "lo", "sa", "vi", "ne", "po", "da", "fi", "gu", "ha",
             "je", "ka", "ly", "mo", "nu", "pe", "qua", "ro", "si", "tu", "ve", "wa", "xe", "yo", "ze"]
VOCAB_TARGET = 2000


def unit(v):
    return v / np.linalg.norm(v)


class Builder:
    def __init__(self, rng):
        self.rng = rng
        self.vectors = {}
        self.tags = {}
        self.sentiment = {}
        self.axis = unit(rng.standard_normal(DIM))
        self.offsets = {k: unit(rng.standard_normal(DIM)) for k in ("3sg", "past", "ger", "pl")}

    def topic(self):
        t = self.rng.standard_normal(DIM)
        t -= t.dot(self.axis) * self.axis
        return unit(t)

    def add(self, word, base, tag, sign, intensity, offset=None):
        v = base + sign * intensity * SENTIMENT_GAIN * self.axis
        if offset is not None:
            v = v + INFLECTION_GAIN * self.offsets[offset]
        v = v + NOISE * self.rng.standard_normal(DIM)
        if word in self.vectors:
            raise ValueError(f"duplicate word {word}")
        self.vectors[word] = v
        self.tags.setdefault(word, [])
        if tag not in self.tags[word]:
            self.tags[word].append(tag)
        self.sentiment[word] = sign * intensity

    def build(self):
        for group in ADJ_GROUPS:
            t = self.topic()
            for word, sign, intensity in group:
                self.add(word, t, "ADJ", sign, intensity)
        for group in ADV_GROUPS:
            t = self.topic()
            for word, sign, intensity in group:
                self.add(word, t, "ADV", sign, intensity)
        for group in NOUN_GROUPS:
            t = self.topic()
            for sing, plur, sign, intensity in group:
                self.add(sing, t, "NOUN", sign, intensity)
                self.add(plur, t, "NOUN_PLURAL", sign, intensity, "pl")
        for group in VERB_GROUPS:
            t = self.topic()
            for (base, s3, past, ger), sign, intensity in group:
                self.add(base, t, "VERB_BASE", sign, intensity)
                self.add(s3, t, "VERB_3SG", sign, intensity, "3sg")
                self.add(past, t, "VERB_PAST", sign, intensity, "past")
                if ger.endswith("_v"):
                    # Gerund shares its surface form with a noun already embedded.
                    self.tags[ger[:-2]].append("VERB_GERUND")
                    continue
                self.add(ger, t, "VERB_GERUND", sign, intensity, "ger")
        # Secondary tags for words that are both nouns and verbs.
        for word in ("love", "view", "watch", "praise", "dislike", "wish", "desire", "draw",
                     "sketch", "offer", "contrast", "craft", "witness", "grate", "turn", "work",
                     "feature", "score", "match", "treat", "delight", "flop", "bore", "paint"):
            if word in self.tags and "NOUN" not in self.tags[word]:
                self.tags[word].append("NOUN")
        if "VERB_BASE" not in self.tags["grate"]:
            self.tags["grate"].append("VERB_BASE")
        for tag, words in FUNCTION_WORDS.items():
            for w in words:
                self.vectors[w] = self.rng.standard_normal(DIM)
                self.tags[w] = [tag]
        for w in CLOSED_CLASS:
            if w not in self.vectors:
                self.vectors[w] = self.rng.standard_normal(DIM)
        # Pseudo-word distractors: unrelated directions that populate the
        # nearest-neighbour scan without ever clearing the loose threshold.
        seen = set(self.vectors)
        while len(self.vectors) < VOCAB_TARGET:
            n = self.rng.integers(2, 4)
            w = "".join(self.rng.choice(SYLLABLES, size=n))
            if w in seen:
                continue
            seen.add(w)
            self.vectors[w] = self.rng.standard_normal(DIM)


TEMPLATES = [
    "a {adj} and {adv} {adj} {noun} .",
    "the {noun} is {adj} , {adj} and {adj} .",
    "i can't {vneut} this {noun} to anything , it is {adj} .",
    "they {vb} the {noun} and the {adj} {noun} .",
    "we {vb} this {adj} {noun} .",
    "the {noun} {vbz} the {noun} , but the {noun} is {adj} .",
    "{adv} {adj} {noun} with a {adj} {noun} .",
    "he {vbd} the {adj} {noun} .",
    "you will {vb} this {adj} {noun} .",
    "it is a {adj} {noun} that feels {adv} {adj} .",
    "a {adj} , {adj} {noun} .",
    "the {adj} {noun} has a {adj} {noun} .",
    "she {vbd} every {noun} of this {adj} {noun} .",
    "an {adv} {adj} {noun} .",
]


def make_dataset(builder, rng, count):
    adjs = [w for g in ADJ_GROUPS for (w, s, _) in g if s != 0]
    advs = [w for g in ADV_GROUPS for (w, s, _) in g]
    nouns = [s for g in NOUN_GROUPS[:12] for (s, _, _, _) in g]
    verbs = [v for g in VERB_GROUPS[:2] for (v, s, _) in g]
    neutral_verbs = [v[0] for g in VERB_GROUPS[2:5] for (v, _, _) in g]
    rows = []
    while len(rows) < count:
        template = TEMPLATES[rng.integers(len(TEMPLATES))]
        # Pick a polarity first so both classes stay balanced.
        polarity = 1 if rng.random() < 0.5 else -1
        used = []

        def pick_adj():
            # Mostly on-polarity, occasionally contrary.
            want = polarity if rng.random() < 0.8 else -polarity
            pool = [a for a in adjs if np.sign(builder.sentiment[a]) == want]
            w = pool[rng.integers(len(pool))]
            used.append(w)
            return w

        def pick_verb(form):
            want = polarity if rng.random() < 0.85 else -polarity
            pool = [v for v in verbs if np.sign(builder.sentiment[v[0]]) == want]
            v = pool[rng.integers(len(pool))]
            used.append(v[0])
            return v[form]

        def pick(pool):
            w = pool[rng.integers(len(pool))]
            used.append(w)
            return w

        text = template
        while "{" in text:
            start = text.index("{")
            end = text.index("}")
            slot = text[start + 1:end]
            if slot == "adj":
                word = pick_adj()
            elif slot == "adv":
                word = pick(advs)
            elif slot == "noun":
                word = pick(nouns)
            elif slot == "vb":
                word = pick_verb(0)
            elif slot == "vbz":
                word = pick_verb(1)
            elif slot == "vbd":
                word = pick_verb(2)
            elif slot == "vneut":
                word = pick(neutral_verbs)
            else:
                raise ValueError(slot)
            text = text[:start] + word + text[end + 1:]
        score = sum(builder.sentiment.get(w, 0.0) for w in used)
        if abs(score) < 0.15:
            continue
        label = 1 if score > 0 else 0
        # "an" only before vowels keeps the corpus free of article errors
        # the grammar rules do not model.
        tokens = text.split()
        for i in range(len(tokens) - 1):
            if tokens[i] in ("a", "an"):
                tokens[i] = "an" if tokens[i + 1][0] in "aeiou" else "a"
        rows.append({"text": " ".join(tokens), "label": label})
    return rows


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--out", default=str(pathlib.Path(__file__).resolve().parent.parent / "data"))
    parser.add_argument("--seed", type=int, default=20200101)
    args = parser.parse_args()
    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    rng = np.random.default_rng(args.seed)
    builder = Builder(rng)
    builder.build()

    words = list(builder.vectors)
    with open(out / "toy_embeddings.txt", "w", encoding="utf-8") as f:
        f.write(f"{len(words)} {DIM}\n")
        for w in words:
            f.write(w + " " + " ".join(f"{x:.6f}" for x in builder.vectors[w]) + "\n")

    with open(out / "lexicon.tsv", "w", encoding="utf-8") as f:
        f.write("# word<TAB>TAG1,TAG2 ; closed-class pronouns, modals and determiners are built in\n")
        for w in sorted(builder.tags):
            if w in CLOSED_CLASS or not w[0].isalpha():
                continue
            f.write(f"{w}\t{','.join(builder.tags[w])}\n")

    rows = make_dataset(builder, rng, 300)
    for name, chunk in (("toy_train.jsonl", rows[:200]), ("toy_test.jsonl", rows[200:])):
        with open(out / name, "w", encoding="utf-8") as f:
            for r in chunk:
                f.write(json.dumps(r) + "\n")


if __name__ == "__main__":
    main()
