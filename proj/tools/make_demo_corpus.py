#!/usr/bin/env python3
# Copyright 2026 The ASC Analyzer Authors. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Writes the small synthetic CoNLL-U corpus behind the bundled "demo" norms.

The corpus is a fixed-seed sample of simple English clauses covering all nine
constructions, so the CLI has a working norm table without any external
download. Regenerate the table afterwards with:

    ascan build-norms --corpus-dir data/demo_corpus --out data/norms/demo.tsv --label demo
"""

import argparse
import pathlib
import random

SUBJECTS = [("she", "she", "PRON"), ("he", "he", "PRON"), ("they", "they", "PRON"),
            ("we", "we", "PRON"), ("I", "I", "PRON"), ("students", "student", "NOUN"),
            ("teachers", "teacher", "NOUN"), ("people", "people", "NOUN")]
OBJECTS = ["book", "letter", "ball", "car", "door", "cake", "song", "idea", "plan", "report"]
PLACES = ["home", "school", "town", "work", "shelf", "table", "river", "park"]
ADJS = ["happy", "tired", "ready", "late", "busy", "angry", "open", "clean", "red", "calm"]

# (form, lemma) per construction, with rough frequency weights.
VERBS = {
    "ATTR": [(("is", "be"), 8), (("was", "be"), 4), (("are", "be"), 2)],
    "CAUS_MOT": [(("put", "put"), 5), (("threw", "throw"), 2), (("sent", "send"), 2),
                 (("brought", "bring"), 3), (("moved", "move"), 1)],
    "DITRAN": [(("gave", "give"), 8), (("sent", "send"), 2), (("told", "tell"), 3),
               (("showed", "show"), 2), (("offered", "offer"), 1)],
    "INTRAN_MOT": [(("went", "go"), 9), (("came", "come"), 5), (("walked", "walk"), 2),
                   (("ran", "run"), 2), (("moved", "move"), 1)],
    "INTRAN_RES": [(("broke", "break"), 2), (("fell", "fall"), 2), (("froze", "freeze"), 1),
                   (("turned", "turn"), 1)],
    "INTRAN_S": [(("laughed", "laugh"), 3), (("slept", "sleep"), 2), (("waited", "wait"), 3),
                 (("smiled", "smile"), 2), (("ran", "run"), 2), (("went", "go"), 1)],
    "PASSIVE": [(("made", "make"), 3), (("given", "give"), 2), (("written", "write"), 2),
                (("found", "find"), 2), (("told", "tell"), 1)],
    "TRAN_S": [(("had", "have"), 10), (("made", "make"), 5), (("saw", "see"), 4),
               (("ate", "eat"), 3), (("liked", "like"), 3), (("read", "read"), 2),
               (("found", "find"), 2), (("took", "take"), 3)],
    "TRAN_RES": [(("made", "make"), 5), (("kept", "keep"), 2), (("painted", "paint"), 1),
                 (("left", "leave"), 1), (("found", "find"), 1)],
}
TYPE_WEIGHTS = {"ATTR": 20, "CAUS_MOT": 4, "DITRAN": 4, "INTRAN_MOT": 8, "INTRAN_RES": 2,
                "INTRAN_S": 10, "PASSIVE": 6, "TRAN_S": 30, "TRAN_RES": 3}
RESULT_ADVS = ["apart", "down", "open", "solid", "loose"]


def pick(rng, weighted):
    items, weights = zip(*weighted)
    return rng.choices(items, weights=weights)[0]


def clause(rng, asc):
    """Returns rows (form, lemma, upos, head, deprel) with head as 1-based id."""
    subj = rng.choice(SUBJECTS)
    form, lemma = pick(rng, VERBS[asc])
    obj = rng.choice(OBJECTS)
    place = rng.choice(PLACES)
    if asc == "ATTR":
        adj = rng.choice(ADJS)
        return [(subj[0], subj[1], subj[2], 3, "nsubj"), (form, lemma, "AUX", 3, "cop"),
                (adj, adj, "ADJ", 0, "root")]
    if asc == "CAUS_MOT":
        return [(subj[0], subj[1], subj[2], 2, "nsubj"), (form, lemma, "VERB", 0, "root"),
                ("the", "the", "DET", 4, "det"), (obj, obj, "NOUN", 2, "obj"),
                ("to", "to", "ADP", 6, "case"), (place, place, "NOUN", 2, "obl")]
    if asc == "DITRAN":
        return [(subj[0], subj[1], subj[2], 2, "nsubj"), (form, lemma, "VERB", 0, "root"),
                ("me", "I", "PRON", 2, "iobj"), ("a", "a", "DET", 5, "det"),
                (obj, obj, "NOUN", 2, "obj")]
    if asc == "INTRAN_MOT":
        return [(subj[0], subj[1], subj[2], 2, "nsubj"), (form, lemma, "VERB", 0, "root"),
                ("to", "to", "ADP", 4, "case"), (place, place, "NOUN", 2, "obl")]
    if asc == "INTRAN_RES":
        adv = rng.choice(RESULT_ADVS)
        return [("the", "the", "DET", 2, "det"), (obj, obj, "NOUN", 3, "nsubj"),
                (form, lemma, "VERB", 0, "root"), (adv, adv, "ADV", 3, "advmod")]
    if asc == "INTRAN_S":
        return [(subj[0], subj[1], subj[2], 2, "nsubj"), (form, lemma, "VERB", 0, "root")]
    if asc == "PASSIVE":
        return [("the", "the", "DET", 2, "det"), (obj, obj, "NOUN", 4, "nsubj:pass"),
                ("was", "be", "AUX", 4, "aux:pass"), (form, lemma, "VERB", 0, "root")]
    if asc == "TRAN_S":
        return [(subj[0], subj[1], subj[2], 2, "nsubj"), (form, lemma, "VERB", 0, "root"),
                ("the", "the", "DET", 4, "det"), (obj, obj, "NOUN", 2, "obj")]
    if asc == "TRAN_RES":
        adj = rng.choice(ADJS)
        return [(subj[0], subj[1], subj[2], 2, "nsubj"), (form, lemma, "VERB", 0, "root"),
                ("the", "the", "DET", 4, "det"), (obj, obj, "NOUN", 2, "obj"),
                (adj, adj, "ADJ", 2, "xcomp")]
    raise ValueError(asc)


def sentence_lines(rows):
    rows = rows + [(".", ".", "PUNCT", next(i for i, r in enumerate(rows, 1) if r[3] == 0),
                    "punct")]
    text = " ".join(r[0] for r in rows)
    lines = [f"# text = {text}"]
    for i, (form, lemma, upos, head, rel) in enumerate(rows, 1):
        lines.append("\t".join([str(i), form, lemma, upos, "_", "_", str(head), rel, "_", "_"]))
    return lines


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default="data/demo_corpus")
    ap.add_argument("--files", type=int, default=12)
    ap.add_argument("--sentences", type=int, default=60)
    ap.add_argument("--seed", type=int, default=20250701)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    types = list(TYPE_WEIGHTS.items())
    for f in range(args.files):
        lines = []
        for s in range(args.sentences):
            asc = pick(rng, types)
            lines.append(f"# sent_id = demo{f:02d}-{s + 1}")
            lines.extend(sentence_lines(clause(rng, asc)))
            lines.append("")
        (out / f"demo_{f:02d}.conllu").write_text("\n".join(lines) + "\n", encoding="utf-8")


if __name__ == "__main__":
    main()
