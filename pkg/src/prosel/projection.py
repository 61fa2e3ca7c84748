"""2-D principal-component projection of acoustic embeddings.

Transition distances between acoustic embeddings are measured in this
projected plane, not in the raw latent space (Euclidean distance there is
not acoustically meaningful). The projection is an exact eigendecomposition
of the embedding covariance with a deterministic sign convention, so fits
are reproducible across runs and platforms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ProjectionError


@dataclass(frozen=True)
class Projector:
    """Mean, two orthonormal components, their variances, and the
    projected-corpus diameter used to normalize distances (0 = none)."""

    mean: np.ndarray
    components: np.ndarray
    explained_variance: np.ndarray
    normalizer: float = 0.0

    def __post_init__(self):
        mean = np.asarray(self.mean, dtype=np.float64)
        components = np.asarray(self.components, dtype=np.float64)
        explained = np.asarray(self.explained_variance, dtype=np.float64)
        if mean.ndim != 1:
            raise ProjectionError("mean must be a 1-D vector")
        if components.shape != (2, mean.size):
            raise ProjectionError(
                f"components must have shape (2, {mean.size})"
            )
        if explained.shape != (2,):
            raise ProjectionError("explained_variance must have 2 entries")
        for arr, name in ((mean, "mean"), (components, "components"),
                          (explained, "explained_variance")):
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)
        object.__setattr__(self, "normalizer", float(self.normalizer))

    @property
    def dim(self) -> int:
        return self.mean.size

    def project(self, embedding) -> np.ndarray:
        """Coordinates of one embedding in the component plane."""
        x = np.asarray(embedding, dtype=np.float64)
        if x.shape != (self.dim,):
            raise ProjectionError(
                f"embedding dimension mismatch: expected {self.dim}, "
                f"found {x.size}"
            )
        return (x - self.mean) @ self.components.T

    def project_batch(self, embeddings: np.ndarray) -> np.ndarray:
        x = np.asarray(embeddings, dtype=np.float64)
        if x.ndim != 2 or x.shape[1] != self.dim:
            raise ProjectionError(
                f"embedding matrix must have {self.dim} columns"
            )
        return (x - self.mean) @ self.components.T

    def distance(self, a, b, normalize: bool = True) -> float:
        """Euclidean distance between two projected embeddings.

        With normalize (the default) the raw distance is divided by the
        projected-corpus diameter, mapping corpus pairs into [0, 1].
        """
        raw = float(np.linalg.norm(self.project(a) - self.project(b)))
        if normalize and self.normalizer > 0.0:
            return raw / self.normalizer
        return raw

    @staticmethod
    def degenerate(mean) -> "Projector":
        """Fallback for zero-variance corpora: axis-aligned components,
        zero variance, no normalization. Every corpus pair projects to the
        same point, so all transition distances are 0."""
        mean = np.asarray(mean, dtype=np.float64)
        components = np.zeros((2, mean.size))
        components[0, 0] = 1.0
        components[1, 1] = 1.0
        return Projector(
            mean=mean,
            components=components,
            explained_variance=np.zeros(2),
            normalizer=0.0,
        )


def _acoustic_rows(data) -> np.ndarray:
    matrix = getattr(data, "acoustic_matrix", None)
    if callable(matrix):
        return matrix()
    return np.asarray(data, dtype=np.float64)


def _pairwise_diameter(points: np.ndarray, chunk: int = 1024) -> float:
    best = 0.0
    for start in range(0, len(points), chunk):
        block = points[start : start + chunk]
        sq = ((block[:, None, :] - points[None, :, :]) ** 2).sum(axis=-1)
        best = max(best, float(sq.max()))
    return math.sqrt(best)


def fit(data) -> Projector:
    """Fit the projection on corpus acoustic embeddings.

    Exact eigendecomposition of the embedding covariance; the top-2
    directions are orientation-pinned by making each component's
    largest-magnitude coordinate positive.
    """
    rows = _acoustic_rows(data)
    if rows.ndim != 2:
        raise ProjectionError("expected a 2-D matrix of embeddings")
    n, d = rows.shape
    if n < 3:
        raise ProjectionError(f"need at least 3 records to fit, found {n}")
    if d < 2:
        raise ProjectionError("embedding dimension must be at least 2")
    mean = rows.mean(axis=0)
    centered = rows - mean
    cov = (centered.T @ centered) / (n - 1)
    eigenvalues, eigenvectors = np.linalg.eigh(cov)
    order = np.argsort(eigenvalues)[::-1][:2]
    variances = np.maximum(eigenvalues[order], 0.0)
    scale = max(1.0, float(np.abs(rows).max()) ** 2)
    if variances[0] <= 1e-12 * scale:
        raise ProjectionError(
            "zero-variance acoustic embeddings (both eigenvalues 0)"
        )
    components = eigenvectors[:, order].T.copy()
    for i in range(2):
        peak = int(np.argmax(np.abs(components[i])))
        if components[i, peak] < 0:
            components[i] = -components[i]
    projector = Projector(
        mean=mean,
        components=components,
        explained_variance=variances,
        normalizer=0.0,
    )
    diameter = _pairwise_diameter(projector.project_batch(rows))
    return Projector(
        mean=mean,
        components=components,
        explained_variance=variances,
        normalizer=diameter,
    )


def fit_or_degenerate(data) -> Projector:
    """fit(), falling back to the degenerate projector on zero variance."""
    try:
        return fit(data)
    except ProjectionError as err:
        if "zero-variance" in str(err):
            return Projector.degenerate(_acoustic_rows(data).mean(axis=0))
        raise


def acoustic_distance(projector: Projector, a, b, normalize: bool = True) -> float:
    return projector.distance(a, b, normalize=normalize)
