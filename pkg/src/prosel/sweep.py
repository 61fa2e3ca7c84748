"""Weight sweep: the linguistic-vs-acoustic trade-off curves.

Re-runs paragraph selection at every weight on a grid (default 1.00 down
to 0.70, step 0.05) and records the mean linguistic distance (1 - ls) and
mean acoustic transition distance over all non-first sentences. Lowering
the weight buys smoother transitions at the cost of linguistic closeness;
the sweep also reports the grid segment with the sharpest drop in
acoustic distance, which is where the smoothing pays off most.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

from .corpus import Corpus
from .errors import SelectionError
from .projection import Projector, fit_or_degenerate
from .selection import SelectionConfig, select_paragraph
from .similarity import SentenceRepr

DEFAULT_GRID = (1.00, 0.95, 0.90, 0.85, 0.80, 0.75, 0.70)


@dataclass(frozen=True)
class SweepPoint:
    lsw: float
    mean_linguistic_distance: float
    mean_acoustic_distance: float
    transitions: int

    def to_dict(self) -> dict:
        return {
            "lsw": self.lsw,
            "mean_linguistic_distance": self.mean_linguistic_distance,
            "mean_acoustic_distance": self.mean_acoustic_distance,
            "transitions": self.transitions,
        }


def parse_grid(text: str) -> list[float]:
    """Parse a "start:stop:step" grid spec into a descending value list."""
    parts = text.split(":")
    if len(parts) != 3:
        raise ValueError("grid must look like start:stop:step, e.g. 1.0:0.7:0.05")
    try:
        start, stop, step = (float(p) for p in parts)
    except ValueError:
        raise ValueError(f"grid values must be numbers: {text!r}") from None
    if step <= 0:
        raise ValueError("grid step must be positive")
    if not (0.0 <= stop <= 1.0 and 0.0 <= start <= 1.0):
        raise ValueError("grid endpoints must lie in [0, 1]")
    lo, hi = min(start, stop), max(start, stop)
    count = int(math.floor((hi - lo) / step + 1e-9))
    values = [round(hi - i * step, 10) for i in range(count + 1)]
    if start < stop:
        values.reverse()
    return values


def sweep(
    corpus: Corpus,
    paragraphs: list[list[SentenceRepr]],
    cfg_template: SelectionConfig,
    grid=DEFAULT_GRID,
    projector: Projector | None = None,
) -> list[SweepPoint]:
    """One SweepPoint per grid value, ordered by descending lsw.

    Means pool every non-first sentence across all paragraphs; summation
    uses math.fsum so aggregation order cannot change the result.
    """
    grid = list(grid)
    if not grid:
        raise SelectionError("sweep grid is empty")
    for value in grid:
        if not 0.0 <= value <= 1.0:
            raise SelectionError(f"grid value out of [0, 1]: {value}")
    if not paragraphs:
        raise SelectionError("sweep needs at least one paragraph")
    if projector is None:
        projector = corpus.projector or fit_or_degenerate(corpus)
    points = []
    for lsw in sorted(grid, reverse=True):
        cfg = replace(cfg_template, lsw=lsw)
        linguistic: list[float] = []
        acoustic: list[float] = []
        for paragraph in paragraphs:
            results = select_paragraph(corpus, paragraph, cfg, projector)
            for result in results[1:]:
                linguistic.append(1.0 - result.ls)
                acoustic.append(result.d)
        count = len(linguistic)
        points.append(
            SweepPoint(
                lsw=lsw,
                mean_linguistic_distance=(
                    math.fsum(linguistic) / count if count else 0.0
                ),
                mean_acoustic_distance=(
                    math.fsum(acoustic) / count if count else 0.0
                ),
                transitions=count,
            )
        )
    return points


def max_drop_segment(points: list[SweepPoint]):
    """(lsw_high, lsw_low, drop) for the largest decrease in mean acoustic
    distance between adjacent grid points; None with fewer than 2 points."""
    if len(points) < 2:
        return None
    best = None
    for left, right in zip(points, points[1:]):
        drop = left.mean_acoustic_distance - right.mean_acoustic_distance
        if best is None or drop > best[2]:
            best = (left.lsw, right.lsw, drop)
    return best


def to_csv(points: list[SweepPoint]) -> str:
    lines = ["lsw,linguistic,acoustic"]
    for point in points:
        lines.append(
            f"{point.lsw!r},{point.mean_linguistic_distance!r},"
            f"{point.mean_acoustic_distance!r}"
        )
    return "\n".join(lines) + "\n"
