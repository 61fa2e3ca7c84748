"""Shared fixtures: random tree generation and synthetic corpora."""

from __future__ import annotations

import json
import random

import numpy as np
import pytest

from prosel.corpus import Corpus, corpus_from_rows
from prosel.trees import ParseTree

# Golden worked example: a sentence, its standard constituency parse,
# the reference distance vector, and two landmark gaps (clause break,
# subject reset) that the distance module must reproduce exactly.
GOLDEN_SENTENCE = "The brown fox is quick and it is jumping over the lazy dog"
GOLDEN_TREE = (
    "(S"
    " (S (NP (DT The) (JJ brown) (NN fox))"
    " (VP (VBZ is) (ADJP (JJ quick))))"
    " (CC and)"
    " (S (NP (PRP it))"
    " (VP (VBZ is)"
    " (VP (VBG jumping)"
    " (PP (IN over)"
    " (NP (DT the) (JJ lazy) (NN dog)))))))"
)
GOLDEN_VECTOR = [0, 2, 1, 3, 1, 8, 7, 6, 5, 4, 3, 2, 1]

LABELS = ["S", "NP", "VP", "PP", "ADJP", "SBAR", "X", "A", "B", "C"]
TAGS = ["DT", "NN", "JJ", "VB", "IN", "PRP", "CC", "RB"]


def random_tree(rng: random.Random, n_leaves: int) -> ParseTree:
    """Random constituency tree with unary chains and wide nodes mixed in."""
    counter = iter(range(10**6))

    def wrap_unary(node: ParseTree) -> ParseTree:
        while rng.random() < 0.25:
            node = ParseTree.node(rng.choice(LABELS), (node,))
        return node

    def build(count: int) -> ParseTree:
        if count == 1:
            leaf = ParseTree.leaf(rng.choice(TAGS), f"w{next(counter)}")
            return wrap_unary(leaf)
        k = rng.randint(2, min(4, count))
        cuts = sorted(rng.sample(range(1, count), k - 1))
        sizes = [b - a for a, b in zip([0] + cuts, cuts + [count])]
        children = tuple(build(size) for size in sizes)
        return wrap_unary(ParseTree.node(rng.choice(LABELS), children))

    return build(n_leaves)


def corpus_rows(
    rng: random.Random,
    n: int,
    d_cwe: int = 8,
    d_ac: int = 6,
    max_leaves: int = 8,
) -> list[dict]:
    from prosel.trees import serialize_tree, tokens

    rows = []
    for i in range(n):
        tree = random_tree(rng, rng.randint(2, max_leaves))
        rows.append(
            {
                "id": f"u{i:03d}",
                "text": " ".join(tokens(tree)),
                "tree": serialize_tree(tree),
                "cwe": [rng.uniform(-1, 1) for _ in range(d_cwe)],
                "acoustic": [rng.uniform(-1, 1) for _ in range(d_ac)],
            }
        )
    return rows


def make_corpus(rows: list[dict]) -> Corpus:
    return corpus_from_rows(list(enumerate(rows, 1)), source="<fixture>")


def write_jsonl(path, rows: list[dict]) -> None:
    path.write_text(
        "".join(json.dumps(row) + "\n" for row in rows), encoding="utf-8"
    )


@pytest.fixture
def rng():
    return random.Random(20240601)


@pytest.fixture
def small_corpus(rng):
    return make_corpus(corpus_rows(rng, 12))


@pytest.fixture
def np_rng():
    return np.random.default_rng(20240601)
