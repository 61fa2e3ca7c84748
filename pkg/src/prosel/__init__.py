"""Linguistically informed acoustic-embedding selection for VAE-based TTS.

Selects, for each test sentence, the most linguistically similar training
utterance's acoustic embedding (by syntactic distance vectors, CWE
sentence vectors, or both), and smooths multi-sentence paragraphs by
trading linguistic similarity against acoustic transition distance.
"""

from .corpus import Corpus, CorpusRecord, ingest, load_index, save_index
from .errors import (
    CorpusError,
    IndexFormatError,
    ProjectionError,
    ProselError,
    SelectionError,
    TreeParseError,
)
from .projection import Projector, acoustic_distance, fit
from .selection import (
    SelectionConfig,
    SelectionResult,
    repr_from_query,
    select_paragraph,
    select_sentence,
)
from .similarity import (
    SentenceRepr,
    SimilarityError,
    SimilarityMode,
    ZeroNormWarning,
    combined_similarity,
    cosine,
    similarity,
    syntactic_similarity,
)
from .sweep import DEFAULT_GRID, SweepPoint, max_drop_segment, parse_grid, sweep
from .syndist import (
    DistanceVector,
    binarize_right,
    collapse_unary,
    distance_vector,
)
from .trees import ParseTree, parse_tree, serialize_tree, tokens

__version__ = "0.1.0"

__all__ = [
    "Corpus",
    "CorpusRecord",
    "CorpusError",
    "DistanceVector",
    "DEFAULT_GRID",
    "IndexFormatError",
    "ParseTree",
    "ProjectionError",
    "Projector",
    "ProselError",
    "SelectionConfig",
    "SelectionError",
    "SelectionResult",
    "SentenceRepr",
    "SimilarityError",
    "SimilarityMode",
    "SweepPoint",
    "TreeParseError",
    "ZeroNormWarning",
    "acoustic_distance",
    "binarize_right",
    "collapse_unary",
    "combined_similarity",
    "cosine",
    "distance_vector",
    "fit",
    "ingest",
    "load_index",
    "max_drop_segment",
    "parse_grid",
    "parse_tree",
    "repr_from_query",
    "save_index",
    "select_paragraph",
    "select_sentence",
    "serialize_tree",
    "similarity",
    "sweep",
    "syntactic_similarity",
    "tokens",
]
