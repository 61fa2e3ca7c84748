"""Acoustic-embedding selection.

Single-sentence mode picks the training record with the highest linguistic
similarity to the query. Paragraph mode walks the sentences left to right
and greedily minimizes

    loss = lsw * (1 - ls) + (1 - lsw) * d

per sentence, where d is the projected acoustic distance to the embedding
chosen for the previous sentence (forced to 0 for the first sentence).
Only adjacent transitions are optimized, never the whole embedding path.
Ties always break toward the lexicographically smallest record id so that
results do not depend on corpus file order.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .corpus import Corpus, CorpusRecord
from .errors import SelectionError
from .projection import Projector
from .similarity import SentenceRepr, SimilarityMode, similarity
from .syndist import distance_vector
from .trees import parse_tree

QUERY_FIELDS = {"id", "text", "tree", "cwe"}


@dataclass(frozen=True)
class SelectionConfig:
    mode: SimilarityMode = SimilarityMode.SYNTACTIC
    lsw: float = 0.9
    normalize_d: bool = True
    top_k: int = 5

    def __post_init__(self):
        if not 0.0 <= self.lsw <= 1.0:
            raise SelectionError(f"lsw must be in [0, 1], got {self.lsw}")
        if self.top_k < 0:
            raise SelectionError("top_k must be >= 0")


@dataclass(frozen=True)
class SelectionResult:
    chosen_id: str
    ls: float
    d: float
    loss: float
    runner_ups: tuple[tuple[str, float], ...] = ()

    def to_dict(self) -> dict:
        return {
            "chosen_id": self.chosen_id,
            "ls": self.ls,
            "d": self.d,
            "loss": self.loss,
            "runner_ups": [
                {"id": rid, "loss": rloss} for rid, rloss in self.runner_ups
            ],
        }


def repr_from_query(row: dict) -> SentenceRepr:
    """Build a query representation from a JSON query object.

    Queries use the corpus schema minus the acoustic field; tree and cwe
    are each optional, but at least one must be present.
    """
    if not isinstance(row, dict):
        raise SelectionError("query must be a JSON object")
    extra = row.keys() - QUERY_FIELDS
    if extra:
        raise SelectionError(f"query has unexpected fields: {sorted(extra)}")
    syndist = None
    if "tree" in row and row["tree"] is not None:
        if not isinstance(row["tree"], str):
            raise SelectionError("query tree must be a bracketed string")
        syndist = tuple(distance_vector(parse_tree(row["tree"])))
    cwe = None
    if "cwe" in row and row["cwe"] is not None:
        if not isinstance(row["cwe"], list) or not row["cwe"]:
            raise SelectionError("query cwe must be a non-empty number array")
        cwe = np.asarray(row["cwe"], dtype=np.float64)
        if not np.all(np.isfinite(cwe)):
            raise SelectionError("query cwe contains a non-finite value")
    if syndist is None and cwe is None:
        raise SelectionError("query needs a tree or a cwe vector")
    return SentenceRepr(cwe=cwe, syndist=syndist)


def _scored(corpus: Corpus, query: SentenceRepr, mode: SimilarityMode):
    if len(corpus) == 0:
        raise SelectionError("corpus is empty")
    return [(record, similarity(query, record.repr, mode)) for record in corpus]


def _pick(entries: list[tuple[CorpusRecord, float, float, float]], top_k: int):
    """entries: (record, ls, d, loss); min loss wins, ties by smallest id."""
    ranked = sorted(entries, key=lambda e: (e[3], e[0].id))
    record, ls, d, loss = ranked[0]
    runner_ups = tuple((e[0].id, e[3]) for e in ranked[1 : 1 + top_k])
    return SelectionResult(
        chosen_id=record.id, ls=ls, d=d, loss=loss, runner_ups=runner_ups
    ), record


def select_sentence(
    corpus: Corpus,
    query: SentenceRepr,
    mode: SimilarityMode,
    top_k: int = 5,
) -> SelectionResult:
    """Pick the record with the highest linguistic similarity (d = 0)."""
    entries = [
        (record, ls, 0.0, 1.0 - ls) for record, ls in _scored(corpus, query, mode)
    ]
    result, _ = _pick(entries, top_k)
    return result


def select_paragraph(
    corpus: Corpus,
    queries: list[SentenceRepr],
    cfg: SelectionConfig,
    projector: Projector,
) -> list[SelectionResult]:
    """Greedy left-to-right selection minimizing the weighted loss."""
    if not queries:
        raise SelectionError("paragraph has no sentences")
    if projector is None:
        raise SelectionError("paragraph selection needs a fitted projector")
    if projector.dim != corpus.d_ac:
        raise SelectionError(
            f"projector dimension {projector.dim} does not match corpus "
            f"acoustic dimension {corpus.d_ac}"
        )
    results: list[SelectionResult] = []
    previous: CorpusRecord | None = None
    for query in queries:
        entries = []
        for record, ls in _scored(corpus, query, cfg.mode):
            if previous is None:
                d = 0.0
            else:
                d = projector.distance(
                    record.acoustic, previous.acoustic,
                    normalize=cfg.normalize_d,
                )
            loss = cfg.lsw * (1.0 - ls) + (1.0 - cfg.lsw) * d
            entries.append((record, ls, d, loss))
        result, chosen = _pick(entries, cfg.top_k)
        results.append(result)
        previous = chosen
    return results
