"""Linguistic similarity between sentences.

Three interchangeable scoring modes: cosine over syntactic distance
vectors, cosine over contextual-word-embedding (CWE) sentence vectors,
or the arithmetic mean of both channels.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import ProselError
from .syndist import DistanceVector


class SimilarityError(ProselError):
    """Operands do not carry what the requested mode needs."""


class ZeroNormWarning(RuntimeWarning):
    """A zero-norm vector was scored; the similarity was defined as 0."""


class SimilarityMode(str, Enum):
    SYNTACTIC = "syntactic"
    CWE = "cwe"
    COMBINED = "combined"


@dataclass(frozen=True)
class SentenceRepr:
    """Vector representations of one sentence; at least one channel set."""

    cwe: np.ndarray | None = None
    syndist: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.cwe is None and self.syndist is None:
            raise SimilarityError(
                "sentence representation needs cwe or syndist"
            )
        if self.cwe is not None:
            arr = np.asarray(self.cwe, dtype=np.float64)
            if arr.ndim != 1 or arr.size == 0:
                raise SimilarityError("cwe must be a non-empty 1-D vector")
            arr.setflags(write=False)
            object.__setattr__(self, "cwe", arr)
        if self.syndist is not None:
            if len(self.syndist) == 0:
                raise SimilarityError("syndist must be non-empty")
            object.__setattr__(
                self, "syndist", tuple(int(v) for v in self.syndist)
            )


def cosine(a, b) -> float:
    """Cosine similarity in [-1, 1]; 0 (with ZeroNormWarning) on zero norm."""
    va = np.asarray(a, dtype=np.float64)
    vb = np.asarray(b, dtype=np.float64)
    if va.ndim != 1 or vb.ndim != 1:
        raise SimilarityError("cosine expects 1-D vectors")
    if va.size != vb.size:
        raise SimilarityError(
            f"vector length mismatch: {va.size} vs {vb.size}"
        )
    if va.size == 0:
        raise SimilarityError("cosine needs vectors of length >= 1")
    norm_a = float(np.linalg.norm(va))
    norm_b = float(np.linalg.norm(vb))
    if norm_a == 0.0 or norm_b == 0.0:
        warnings.warn(
            "zero-norm vector in cosine; similarity defined as 0",
            ZeroNormWarning,
            stacklevel=2,
        )
        return 0.0
    if np.array_equal(va, vb):
        return 1.0  # keep self-similarity exactly 1 despite rounding
    value = float(np.dot(va, vb) / (norm_a * norm_b))
    return float(min(1.0, max(-1.0, value)))


def syntactic_similarity(a: DistanceVector, b: DistanceVector) -> float:
    """Cosine over distance vectors, zero-padding the shorter one."""
    if len(a) == 0 or len(b) == 0:
        raise SimilarityError("syntactic similarity needs non-empty vectors")
    size = max(len(a), len(b))
    va = np.zeros(size, dtype=np.float64)
    vb = np.zeros(size, dtype=np.float64)
    va[: len(a)] = a
    vb[: len(b)] = b
    return cosine(va, vb)


def combined_similarity(a: "SentenceRepr", b: "SentenceRepr") -> float:
    """Mean of the CWE and syntactic channel similarities."""
    for name, repr_ in (("first", a), ("second", b)):
        if repr_.cwe is None:
            raise SimilarityError(f"{name} operand is missing cwe")
        if repr_.syndist is None:
            raise SimilarityError(f"{name} operand is missing syndist")
    return 0.5 * (
        cosine(a.cwe, b.cwe) + syntactic_similarity(a.syndist, b.syndist)
    )


def similarity(a: SentenceRepr, b: SentenceRepr, mode: SimilarityMode) -> float:
    """Score two sentence representations under the given mode."""
    if mode is SimilarityMode.SYNTACTIC:
        for name, repr_ in (("first", a), ("second", b)):
            if repr_.syndist is None:
                raise SimilarityError(f"{name} operand is missing syndist")
        return syntactic_similarity(a.syndist, b.syndist)
    if mode is SimilarityMode.CWE:
        for name, repr_ in (("first", a), ("second", b)):
            if repr_.cwe is None:
                raise SimilarityError(f"{name} operand is missing cwe")
        return cosine(a.cwe, b.cwe)
    return combined_similarity(a, b)
